"""
Proof files: JSON lines. A header record, then one record per node in
pre-order (the root has id 0). Field order is fixed so identical proofs
serialize to identical bytes.
"""

import json
from typing import Dict, List

from tentacle.errors import ArtifactError, InputError
from tentacle.kernel.parser import parse_formula
from tentacle.kernel.printer import pretty
from tentacle.kernel.signature import Signature
from tentacle.prover.rules import Proof, RuleId

FORMAT = 1


def proof_records(proof: Proof) -> List[dict]:
    records: List[dict] = []

    def visit(node: Proof) -> int:
        node_id = len(records)
        record = {"id": node_id, "rule": node.rule.value, "conclusion": pretty(node.conclusion),
                  "premises": [], "side": list(node.side)}
        records.append(record)
        record["premises"] = [visit(premise) for premise in node.premises]
        return node_id

    visit(proof)
    return records


def dump_proof(proof: Proof) -> str:
    header = {"kind": "proof", "format": FORMAT, "root": 0, "goal": pretty(proof.conclusion)}
    lines = [json.dumps(header, ensure_ascii=False)]
    lines.extend(json.dumps(r, ensure_ascii=False) for r in proof_records(proof))
    return "\n".join(lines) + "\n"


def load_proof(text: str, signature: Signature) -> Proof:
    """Rebuild a proof; structural damage raises ArtifactError."""
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines:
        raise ArtifactError("Proof file is empty")
    try:
        header = json.loads(lines[0])
        records = [json.loads(line) for line in lines[1:]]
    except json.JSONDecodeError as exc:
        raise ArtifactError(f"Proof file is not JSON lines: {exc}")
    if header.get("kind") != "proof" or header.get("format") != FORMAT:
        raise ArtifactError("Not a proof file (bad header)")
    return build_proof(records, header.get("root", 0), signature)


def build_proof(records: List[dict], root, signature: Signature) -> Proof:
    by_id: Dict[int, dict] = {}
    for record in records:
        if not isinstance(record, dict) or "id" not in record:
            raise ArtifactError("Proof record without id")
        if record["id"] in by_id:
            raise ArtifactError(f"Duplicate proof node id {record['id']}")
        by_id[record["id"]] = record

    built: Dict[int, Proof] = {}
    visiting = set()

    def build(node_id) -> Proof:
        if node_id in built:
            return built[node_id]
        if node_id not in by_id:
            raise ArtifactError(f"Proof node {node_id} is missing")
        if node_id in visiting:
            raise ArtifactError(f"Proof node {node_id} is part of a cycle")
        visiting.add(node_id)
        record = by_id[node_id]
        try:
            rule = RuleId(record["rule"])
            conclusion = parse_formula(record["conclusion"], signature)
        except ValueError:
            raise ArtifactError(f"Unknown rule '{record.get('rule')}' at node {node_id}")
        except InputError as exc:
            raise ArtifactError(f"Unreadable conclusion at node {node_id}: {exc}")
        except KeyError as exc:
            raise ArtifactError(f"Proof node {node_id} lacks {exc}")
        premises = tuple(build(p) for p in record.get("premises", []))
        visiting.discard(node_id)
        built[node_id] = Proof(conclusion, rule, premises, tuple(record.get("side", [])))
        return built[node_id]

    return build(root)

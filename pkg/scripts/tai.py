"""
Tentacular planning engine command line.

Usage:
    python scripts/tai.py check config/scenarios/storm.tai
    python scripts/tai.py prove KB.tai "(implies p p)" --emit-proof out/p.proof.jsonl
    python scripts/tai.py plan KB.tai "(holds alarm 3)" --agent a --certify-nonexistence out/none.cert.jsonl
    python scripts/tai.py run config/scenarios/monoxide.tai --out artifacts/monoxide
    python scripts/tai.py verify artifacts/monoxide/t001-tau-plan-04.proof.jsonl artifacts/monoxide/t001-tau-plan-04.kb.tai
"""

import sys
from pathlib import Path

from dotenv import load_dotenv

# Add project root to path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

load_dotenv(project_root / ".env")

from tentacle.cli import main  # noqa: E402

if __name__ == "__main__":
    sys.exit(main())

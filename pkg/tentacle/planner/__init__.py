"""Plan search with satisfaction proofs, plan reification and nonexistence certificates."""

from tentacle.planner.catalog import (  # noqa: F401
    CatalogEntry, candidate_count, catalog_from, enumerate_candidates,
)
from tentacle.planner.certificate import (  # noqa: F401
    CertificateCheck, NonexistenceCertificate, check_certificate, dump_certificate,
    load_certificate,
)
from tentacle.planner.plans import (  # noqa: F401
    Plan, PlanStep, interpret, nonexistence_says, plan_says, reify,
)
from tentacle.planner.search import (  # noqa: F401
    NotShown, PlanFound, PlanningProblem, PlanVerdict, is_consistent_plan, satisfies, search,
)

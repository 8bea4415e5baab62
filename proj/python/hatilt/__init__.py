from ._hatilt import (
    BudgetExceeded,
    PreconditionError,
    __version__,
    claim_names,
    coords,
    enumerate_dyck,
    enumerate_paths,
    hom_dim,
    hom_dim_linear,
    is_dyck,
    rotate,
    run_claim,
)

__all__ = [
    "BudgetExceeded",
    "PreconditionError",
    "__version__",
    "claim_names",
    "coords",
    "enumerate_dyck",
    "enumerate_paths",
    "hom_dim",
    "hom_dim_linear",
    "is_dyck",
    "rotate",
    "run_claim",
]

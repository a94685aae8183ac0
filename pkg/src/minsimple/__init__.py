"""Finite permutation-group engine for checking claims about minimal simple groups."""

from .perm import *  # noqa: F401,F403
from .fields import *  # noqa: F401,F403
from .group import *  # noqa: F401,F403
from .iso import *  # noqa: F401,F403
from .constructions import *  # noqa: F401,F403
from .lattice import *  # noqa: F401,F403
from .classification import *  # noqa: F401,F403
from .report import PASS, FAIL, SKIPPED, Report
from .verify import Options, run_claims

from . import classification, constructions, fields, group, iso, lattice, perm

__all__ = (
    perm.__all__ + fields.__all__ + group.__all__ + iso.__all__ + constructions.__all__
    + lattice.__all__ + classification.__all__ + ["PASS", "FAIL", "SKIPPED", "Report", "Options", "run_claims"]
)
__version__ = "0.1.0"

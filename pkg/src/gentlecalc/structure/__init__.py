"""Products and brackets on Hochschild (co)homology, and the invariants
derived from them."""

from .bracket import *  # noqa: F401,F403
from .cap import *  # noqa: F401,F403
from .cup import *  # noqa: F401,F403
from .invariants import *  # noqa: F401,F403
from .resolution import *  # noqa: F401,F403

"""
poalgebra
Poset morphisms, poalgebra terms and the machine verification of their presentation

"""


from ._version import __version__  # noqa: F401
from .posets import *  # noqa: F401, F403
from .relations import *  # noqa: F401, F403
from .terms import *  # noqa: F401, F403
from .rules import *  # noqa: F401, F403
from .interp import *  # noqa: F401, F403
from .rewriting import *  # noqa: F401, F403
from .factorization import *  # noqa: F401, F403
from .io import *  # noqa: F401, F403
from .harness import *  # noqa: F401, F403
from .testmodels import *  # noqa: F401, F403

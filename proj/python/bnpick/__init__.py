from ._bnpick import *  # noqa: F401,F403
from ._bnpick import __doc__  # noqa: F401

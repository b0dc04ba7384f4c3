from nullsurf._core import *  # noqa: F401,F403
from nullsurf._core import __version__  # noqa: F401

from advicegame._core import *  # noqa: F401,F403
from advicegame._core import __version__  # noqa: F401

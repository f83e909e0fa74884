from ._isoext import *  # noqa: F401,F403

from .clients import *  # noqa: F401, F403

from .service_state import *  # noqa: F401, F403

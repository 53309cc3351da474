from .corpus import *  # noqa: F401, F403
from .settings import *  # noqa: F401, F403
from .storages import *  # noqa: F401, F403
from .synthetic import *  # noqa: F401, F403

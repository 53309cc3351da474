import os

# Set on the earliest possible moment
os.environ['PYTEST_RUNNING'] = 'true'

from marebito.api.tests.fixtures import *  # noqa: F401, F403, E402
from marebito.business_logic.tests.fixtures import *  # noqa: F401, F403, E402
from marebito.core.tests.fixtures import *  # noqa: F401, F403, E402

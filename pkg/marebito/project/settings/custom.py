# File for deployment-specific settings
SENTRY_DSN = None
SENTRY_EVENT_LEVEL = 'WARNING'
IS_LOCAL_SETTINGS_FILE_APPLIED = False
TEST_WITH_ENV_VARS = False
CONFIG_FILE = None

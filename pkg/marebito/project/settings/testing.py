# Reproducible unittest runs without a local settings file
SECRET_KEY = 'unittests-secret-key'

"""
Django settings for the skewlab project.

skewlab has no web surface: Django supplies configuration, the management
command that drives the batch checker, translations for user-facing messages,
and the test runner.

For the full list of settings and their values, see
https://docs.djangoproject.com/en/4.2/ref/settings/
"""

import os

# Build paths inside the project like this: os.path.join(BASE_DIR, ...)
BASE_DIR = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))


# No sessions, no signing; a placeholder keeps Django's checks quiet.
SECRET_KEY = 'skewlab-has-no-web-surface'

DEBUG = False

ALLOWED_HOSTS = []


# Application definition

INSTALLED_APPS = [
    'skewcat',
]

MIDDLEWARE = []


# Database
# Nothing is persisted: every check is a pure computation over fixture files.

DATABASES = {}


# Internationalization
# https://docs.djangoproject.com/en/4.2/topics/i18n/

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = True

USE_TZ = True


# +------------------------------------------------------------------------------------------------+
# |                                                                                                |
# |                                           logging                                              |
# |                                                                                                |
# +------------------------------------------------------------------------------------------------+

# https://docs.djangoproject.com/en/4.2/topics/logging/
LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'plain': {
            'format': '{levelname} {name}: {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'plain',
        },
    },
    'loggers': {
        'skewcat': {
            'handlers': ['console'],
            'level': os.environ.get('SKEWCAT_LOG_LEVEL', 'WARNING'),
            'propagate': False,
        },
    },
}

# +------------------------------------------------------------------------------------------------+
# |                                                                                                |
# |                                           skewcat                                              |
# |                                                                                                |
# +------------------------------------------------------------------------------------------------+

# Braiding used for every c_{X,Y}. Must name a subclass of skewcat.tensor.AbstractBraiding.
SKEWCAT_BRAIDING_CLASS = 'skewcat.tensor.KoszulBraiding.KoszulBraiding'

# Upper bound on worker threads used by the skewcat command.
SKEWCAT_THREADS = max(1, int(os.environ.get('SKEWCAT_THREADS', '1')))

SKEWCAT_SCHEMA_VERSION = 1
SKEWCAT_DEFAULT_SEED = 0

# Size bounds for randomly generated categories (fuzz command).
SKEWCAT_FUZZ_MAX_OBJECTS = 5
SKEWCAT_FUZZ_MAX_MORPHISMS = 12

# +------------------------------------------------------------------------------------------------+
# |                                                                                                |
# |                 local_settings.py; don't declare anything after this banner!                   |
# |                                                                                                |
# +------------------------------------------------------------------------------------------------+

try:
    from .local_settings import *  # noqa: F401,F403
except ImportError:
    pass

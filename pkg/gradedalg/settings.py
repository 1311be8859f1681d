"""
Django settings for the gradedalg project.

The project has no web surface: every operation is a management command
(see cli/management/commands) and no database is configured.

For the full list of settings and their values, see
https://docs.djangoproject.com/en/5.2/ref/settings/
"""
from pathlib import Path

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

# Commands never sign anything; Django still insists on a value.
SECRET_KEY = 'gradedalg-local-only-not-a-secret'

DEBUG = False

ALLOWED_HOSTS = []


# Application definition

INSTALLED_APPS = [
    # Third-party apps
    'rest_framework',

    # Local apps
    'core',
    'groups',
    'algebras',
    'constructions',
    'analysis',
    'cli',
]

MIDDLEWARE = []


# Database
# Structure constants live in JSON documents, not in a database.

DATABASES = {}


# Internationalization
# https://docs.djangoproject.com/en/5.2/topics/i18n/

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = False

USE_TZ = True

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'


# Django REST Framework Configuration
# Only serializers, the JSON parser and the JSON renderer are used.
REST_FRAMEWORK = {
    'DEFAULT_RENDERER_CLASSES': (
        'rest_framework.renderers.JSONRenderer',
    ),
    'DEFAULT_PARSER_CLASSES': (
        'rest_framework.parsers.JSONParser',
    ),
    'COERCE_DECIMAL_TO_STRING': False,
    'UNAUTHENTICATED_USER': None,
}


# Logging
# Logs go to stderr so that command output on stdout stays byte-identical
# between runs.
LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '{asctime} {levelname} {name} {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'verbose',
        },
    },
    'root': {
        'handlers': ['console'],
        'level': 'WARNING',
    },
    'loggers': {
        app: {'handlers': ['console'], 'level': 'INFO', 'propagate': False}
        for app in ('core', 'groups', 'algebras', 'constructions', 'analysis', 'cli')
    },
}


# Algebra limits
# Desk-scale caps for exhaustive loops. See core.conf for the defaults.
ALGEBRA_LIMITS = {
    'GROUP_MAX_DIMENSION': 62,
    'ENUMERATION_MAX_DIMENSION': 20,
    'COCYCLE_MAX_DIMENSION': 8,
    'TWISTED_MAX_DIMENSION': 12,
    'CLIFFORD_MAX_GENERATORS': 10,
    'VERIFY_MAX_BASIS': 256,
    'TABLE_MAX_BASIS': 64,
    'SEARCH_NODE_BUDGET': 500000,
}

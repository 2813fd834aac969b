"""
Django settings for the fcabench project.
"""

from pathlib import Path
import os

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent


# SECURITY WARNING: keep the secret key used in production secret!
SECRET_KEY = os.environ.get('SECRET_KEY', 'django-insecure-fcabench-local-only')

# SECURITY WARNING: don't run with debug turned on in production!
DEBUG = os.environ.get('DEBUG', 'False') == 'True'

ALLOWED_HOSTS = os.environ.get('ALLOWED_HOSTS', 'localhost;127.0.0.1').split(';')


# Application definition

INSTALLED_APPS = [
    'django.contrib.admin',
    'django.contrib.auth',
    'django.contrib.contenttypes',
    'django.contrib.sessions',
    'django.contrib.messages',
    'django.contrib.staticfiles',
    'concepts',
    'relevance',
    'benchmark',
]

MIDDLEWARE = [
    'django.middleware.security.SecurityMiddleware',
    'django.contrib.sessions.middleware.SessionMiddleware',
    'django.middleware.common.CommonMiddleware',
    'django.middleware.csrf.CsrfViewMiddleware',
    'django.contrib.auth.middleware.AuthenticationMiddleware',
    'django.contrib.messages.middleware.MessageMiddleware',
    'django.middleware.clickjacking.XFrameOptionsMiddleware',
]

ROOT_URLCONF = 'fcabench.urls'

TEMPLATES = [
    {
        'BACKEND': 'django.template.backends.django.DjangoTemplates',
        'DIRS': [],
        'APP_DIRS': True,
        'OPTIONS': {
            'context_processors': [
                'django.template.context_processors.debug',
                'django.template.context_processors.request',
                'django.contrib.auth.context_processors.auth',
                'django.contrib.messages.context_processors.messages',
            ],
        },
    },
]


# Database
# https://docs.djangoproject.com/en/4.2/ref/settings/#databases

DATABASES = {
    'default': {
        'ENGINE': 'django.db.backends.sqlite3',
        'NAME': BASE_DIR / 'db.sqlite3',
    }
}


# Internationalization
# https://docs.djangoproject.com/en/4.2/topics/i18n/

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = True

USE_TZ = True


# Static files (admin only)
STATIC_URL = 'static/'

# Default primary key field type
# https://docs.djangoproject.com/en/4.2/ref/settings/#default-auto-field

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'


# Concept analysis
# Library calls read these when the matching keyword argument is omitted.

# Lattice construction fails loudly above this many concepts
FCA_MAX_CONCEPTS = int(os.environ.get('FCA_MAX_CONCEPTS', '5000000'))

# Up to this many concepts covers come from pairwise extent inclusion,
# above it from neighbour finding
FCA_COVER_PAIRWISE_LIMIT = int(os.environ.get('FCA_COVER_PAIRWISE_LIMIT', '10000'))

# Brute-force stability enumerates 2^|A| subsets
FCA_MAX_STABILITY_EXTENT = int(os.environ.get('FCA_MAX_STABILITY_EXTENT', '24'))

# Test oracles
FCA_ORACLE_MAX_ATTRIBUTES = int(os.environ.get('FCA_ORACLE_MAX_ATTRIBUTES', '20'))
FCA_ORACLE_MAX_INTENT = int(os.environ.get('FCA_ORACLE_MAX_INTENT', '18'))

# Scoring and evaluation defaults
FCA_DEFAULT_INDEX = os.environ.get('FCA_DEFAULT_INDEX', 'cr')
FCA_DEFAULT_ACTIVATION = os.environ.get('FCA_DEFAULT_ACTIVATION', 'arithmetic')
FCA_STABILITY_METHOD = os.environ.get('FCA_STABILITY_METHOD', 'brute')
FCA_SPLIT_RATIO = float(os.environ.get('FCA_SPLIT_RATIO', '0.5'))
FCA_SEED = int(os.environ.get('FCA_SEED', '42'))
FCA_THREADS = int(os.environ.get('FCA_THREADS', '1'))

# Significant digits of scores in CSV output
FCA_SCORE_DIGITS = int(os.environ.get('FCA_SCORE_DIGITS', '12'))

# Logging configuration
LOG_LEVEL = os.environ.get('LOG_LEVEL', 'INFO')

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '{levelname} {asctime} {module} {process:d} {thread:d} {message}',
            'style': '{',
        },
        'simple': {
            'format': '{levelname} {message}',
            'style': '{',
        },
    },
    'handlers': {
        'file': {
            'level': 'DEBUG',
            'class': 'logging.FileHandler',
            'filename': BASE_DIR / 'logs' / 'fca.log',
            'formatter': 'verbose',
        },
        'console': {
            'level': 'WARNING',
            'class': 'logging.StreamHandler',
            'formatter': 'simple',
        },
    },
    'root': {
        'handlers': ['console', 'file'],
        'level': 'INFO',
    },
    'loggers': {
        'django': {
            'handlers': ['console', 'file'],
            'level': 'INFO',
            'propagate': False,
        },
        'concepts': {
            'handlers': ['console', 'file'],
            'level': LOG_LEVEL,
            'propagate': False,
        },
        'relevance': {
            'handlers': ['console', 'file'],
            'level': LOG_LEVEL,
            'propagate': False,
        },
        'benchmark': {
            'handlers': ['console', 'file'],
            'level': LOG_LEVEL,
            'propagate': False,
        },
    },
}

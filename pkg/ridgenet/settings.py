"""
Django settings for the ridgenet project.

The project has no HTTP surface; Django provides the management-command CLI, the app registry and the test runner.
"""

import os

BASE_DIR = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))

SECRET_KEY = os.environ.get('SECRET_KEY', 'ridgenet-local-only')

DEBUG = False

ALLOWED_HOSTS = []

INSTALLED_APPS = [
    'core_grids',
    'special_functions',
    'activations',
    'admissibility',
    'ridgelet',
    'radon',
    'phantoms',
    'experiments',
]

MIDDLEWARE = []

DATABASES = {
    'default': {
        'ENGINE': 'django.db.backends.sqlite3',
        'NAME': os.path.join(BASE_DIR, 'db.sqlite3'),
        'TEST': {
            'NAME': ':memory:',
        },
    }
}

DEFAULT_AUTO_FIELD = 'django.db.models.AutoField'

TEST_RUNNER = 'django.test.runner.DiscoverRunner'

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_TZ = True

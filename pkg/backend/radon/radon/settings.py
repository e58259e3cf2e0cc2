import os

from dotenv import load_dotenv

load_dotenv()

SECRET_KEY = os.getenv(
    'SECRET_KEY', default='radon-local-verification-key-not-for-deployment'
)

DEBUG = os.getenv('DEBUG', default='False') == 'True'

ALLOWED_HOSTS = []

INSTALLED_APPS = [
    'rest_framework',
    'padic.apps.PadicConfig',
    'archimedean.apps.ArchimedeanConfig',
    'geometry.apps.GeometryConfig',
    'suites.apps.SuitesConfig',
]

DATABASES = {}

REST_FRAMEWORK = {
    'UNAUTHENTICATED_USER': None,
}

LANGUAGE_CODE = 'ru'

TIME_ZONE = 'Europe/Moscow'

USE_I18N = True

USE_TZ = True

RADON = {
    'PRECISION': int(os.getenv('RADON_PRECISION', default=12)),
    'QUADRATURE_ORDER': int(os.getenv('RADON_QUADRATURE_ORDER', default=200)),
    'SEED': int(os.getenv('RADON_SEED', default=0)),
    'ZERO_THRESHOLD': float(os.getenv('RADON_ZERO_THRESHOLD', default=1e-9)),
    'TOLERANCES': {
        'MELLIN': 1e-8,
        'RECIPROCITY': 1e-6,
        'ROUND_TRIP': 1e-6,
        'DIRECT_RADON': 1e-8,
        'ZONAL_REAL': 1e-10,
        'ZONAL_COMPLEX': 1e-8,
        'KERNEL_BOUND': 1e-12,
        'HAUSDORFF_FACTOR': 3,
    },
}

LOG_LEVEL = os.getenv('RADON_LOG_LEVEL', default='WARNING')

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '%(asctime)s %(levelname)s %(name)s: %(message)s',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'verbose',
        },
    },
    'loggers': {
        'padic': {'handlers': ['console'], 'level': LOG_LEVEL},
        'archimedean': {'handlers': ['console'], 'level': LOG_LEVEL},
        'geometry': {'handlers': ['console'], 'level': LOG_LEVEL},
        'suites': {'handlers': ['console'], 'level': LOG_LEVEL},
    },
}

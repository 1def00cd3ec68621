"""
Django settings for the GelfandDesk project.

The project has no database and no HTTP surface: Django provides the settings
layer, the app registry, management commands (the command-line surface) and the
test runner.

For more information on this file, see
https://docs.djangoproject.com/en/5.0/topics/settings/
"""
import os
from pathlib import Path

import environ

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

# Take environment variables from .env file
env = environ.Env()
environ.Env.read_env(os.path.join(BASE_DIR, ".env"))

# Only used by Django internals (signing); nothing here is served.
SECRET_KEY = env.str("DJANGO_SECRET_KEY", default="gelfand-desk-local-only")

DEBUG = env.bool("DEBUG", False)

ALLOWED_HOSTS = []

# Application definition

INSTALLED_APPS = [
    # External Packages
    "rest_framework",
    # Made by me
    "apps.core",
    "apps.algebra",
    "apps.functions",
]

# No persistent storage: inputs and outputs are files and standard streams.
DATABASES = {}

# Internationalization
# https://docs.djangoproject.com/en/5.0/topics/i18n/

LANGUAGE_CODE = "en-us"

TIME_ZONE = "UTC"

USE_I18N = False

USE_TZ = True

DEFAULT_AUTO_FIELD = "django.db.models.BigAutoField"

# -------------------------
# --- REST-API Settings ---
# -------------------------

# Serializers are used for input validation only.
REST_FRAMEWORK = {
    "COERCE_DECIMAL_TO_STRING": False,
    "UNAUTHENTICATED_USER": None,
}

# ---------------------------
# --- Numerical Defaults ---
# ---------------------------

GELFAND = {
    "VERSION": "0.4.0",
    # default classification tolerance; GELFAND_TOL overrides the default, never a per-run flag
    "TOL": env.float("GELFAND_TOL", default=1e-9),
    # dedup and set-comparison radius shared by every module
    "DEDUP_RADIUS": 1e-7,
    # relative singular-value cut for rank, invertibility and semisimplicity
    "RANK_TOL": 1e-8,
    "CERTIFICATE_TOL": 1e-8,
    # residuals in (CERTIFICATE_TOL, AMBIGUOUS_UPPER) are never classified
    "AMBIGUOUS_UPPER": 1e-4,
    "PRUNE_TOL": 1e-10,
    "COLLISION_TOL": 1e-6,
    # verdicts that differ with lambda within this factor of DEDUP_RADIUS are ambiguous
    "MEMBERSHIP_BAND": 10.0,
    "CHARACTER_RETRIES": 5,
    "NEWTON_MAX_ITER": 50,
    "CXA_MAX_DIM": env.int("GELFAND_CXA_MAX_DIM", default=64),
    "PERTURBATION_SAMPLES": 32,
    "PERTURBATION_RADIUS": 0.5,
    "USC_MAX_CONSTANT": 10.0,
    "DEFAULT_SEED": 0,
}

# ---------------
# --- Logging ---
# ---------------

# Reports go to stdout, so every log record goes to stderr.
LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "verbose": {
            "format": "{asctime} {levelname} {name}: {message}",
            "style": "{",
        },
    },
    "handlers": {
        "console": {
            "class": "logging.StreamHandler",
            "stream": "ext://sys.stderr",
            "formatter": "verbose",
        },
    },
    "loggers": {
        "apps": {
            "handlers": ["console"],
            "level": env.str("LOG_LEVEL", default="WARNING"),
            "propagate": False,
        },
    },
}

import os
from pathlib import Path
from dotenv import load_dotenv

BASE_DIR = Path(__file__).resolve().parent.parent
load_dotenv(BASE_DIR / ".env")

SECRET_KEY = os.getenv("SECRET_KEY", "dev_secret_change_me")
DEVELOPMENT_MODE = os.getenv("DEVELOPMENT_MODE", "dev").lower()  # expected "dev" or "prod"
DEBUG = DEVELOPMENT_MODE == "dev"

ALLOWED_HOSTS = []

# Applications
INSTALLED_APPS = [
    "general",
    "corpus",
    "metric",
    "simjoin",
    "netstats",
    "attack",
    "mindict",
    "pipeline",
    "testing",
]

# Nothing is persisted; the in-memory database only keeps Django's checks quiet.
DATABASES = {
    "default": {
        "ENGINE": "django.db.backends.sqlite3",
        "NAME": ":memory:",
    }
}

DEFAULT_AUTO_FIELD = "django.db.models.BigAutoField"

# Internationalization
LANGUAGE_CODE = "en-us"
TIME_ZONE = "UTC"
USE_I18N = False
USE_TZ = True

# Logging
LOG_LEVEL = os.getenv("LOG_LEVEL", "INFO").upper()
LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "plain": {"format": "%(asctime)s %(levelname)s %(name)s %(message)s"},
    },
    "handlers": {
        "console": {"class": "logging.StreamHandler", "formatter": "plain"},
    },
    "loggers": {
        app: {"handlers": ["console"], "level": LOG_LEVEL, "propagate": False}
        for app in INSTALLED_APPS
    },
}

# Password network tuning (see each app's config.py for the defaults)
PWNET_DEFAULT_THRESHOLD = int(os.getenv("PWNET_DEFAULT_THRESHOLD", 3))
PWNET_JOIN_WORKERS = int(os.getenv("PWNET_JOIN_WORKERS", 1))
PWNET_NAIVE_JOIN_LIMIT = int(os.getenv("PWNET_NAIVE_JOIN_LIMIT", 2000))
PWNET_ENUMERATION_BUDGET = int(os.getenv("PWNET_ENUMERATION_BUDGET", 2_000_000))
PWNET_EXACT_NODE_BUDGET = int(os.getenv("PWNET_EXACT_NODE_BUDGET", 20))
PWNET_POWERLAW_MIN_SAMPLES = int(os.getenv("PWNET_POWERLAW_MIN_SAMPLES", 50))

# Acceptance scenarios are slow; keep them off unless asked for.
ALLOW_TEST_SCENARIOS = os.getenv("ALLOW_TEST_SCENARIOS", "False") == "True"

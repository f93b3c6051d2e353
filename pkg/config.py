"""
Self-Dual Codes - Configuration
================================
Configuration settings for different environments.
"""
import os
from dotenv import load_dotenv
load_dotenv()

BASE_DIR = os.path.abspath(os.path.dirname(__file__))

class Config:
    """Base configuration."""
    # Logging
    LOG_LEVEL = os.environ.get('LOG_LEVEL', 'INFO')

    # Reproducibility
    DEFAULT_SEED = int(os.environ.get('SELFDUAL_SEED', '0'))

    # Desk-scale caps
    ORDER_CAP = int(os.environ.get('SELFDUAL_ORDER_CAP', '20000'))
    MAX_FIELD_ORDER = int(os.environ.get('SELFDUAL_MAX_FIELD', str(2 ** 20)))

    # Brute-force oracle
    SEARCH_BUDGET = int(os.environ.get('SELFDUAL_SEARCH_BUDGET', '65536'))
    RAW_ENUM_MAX_N = int(os.environ.get('SELFDUAL_RAW_ENUM_MAX_N', '6'))

    # Meataxe
    MEATAXE_RETRIES = int(os.environ.get('SELFDUAL_MEATAXE_RETRIES', '64'))

class DevelopmentConfig(Config):
    """Development configuration."""
    DEBUG = True

class ProductionConfig(Config):
    """Production configuration."""
    DEBUG = False

class TestingConfig(Config):
    """Testing configuration."""
    TESTING = True
    LOG_LEVEL = 'WARNING'

config = {
    'development': DevelopmentConfig,
    'production': ProductionConfig,
    'testing': TestingConfig,
    'default': DevelopmentConfig
}


def get_config(config_name=None):
    """Return the active configuration class (``ENVIRONMENT`` picks it)."""
    if config_name is None:
        config_name = os.environ.get('ENVIRONMENT', 'default')
    return config.get(config_name, config['default'])

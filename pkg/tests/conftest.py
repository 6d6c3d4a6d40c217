import os
import sys
import pytest
import warnings

# Add project root to Python path for imports
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from src.graph.graph import Graph  # noqa: E402
from src.utils.config_manager import ConfigManager, VerificationSettings  # noqa: E402


def pytest_configure(config):
    """Configure pytest."""
    warnings.filterwarnings('ignore', category=DeprecationWarning, message='.*has no __module__ attribute')
    warnings.filterwarnings('ignore', category=DeprecationWarning, module='importlib._bootstrap')


@pytest.fixture
def settings():
    """Default verification settings."""
    return VerificationSettings()


@pytest.fixture
def path4():
    return Graph.from_edge_list(4, [(0, 1), (1, 2), (2, 3)])


@pytest.fixture
def star5():
    return Graph.from_edge_list(5, [(0, 1), (0, 2), (0, 3), (0, 4)])


@pytest.fixture
def fresh_config():
    """Reset the configuration singleton before and after a test."""
    ConfigManager._instance = None
    ConfigManager._config = None
    yield
    ConfigManager._instance = None
    ConfigManager._config = None

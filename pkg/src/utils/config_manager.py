"""Configuration manager for irrlab."""
import os
import yaml
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Optional
from loguru import logger

CONFIG_ENV_VAR = "IRRLAB_CONFIG"
WORKERS_ENV_VAR = "IRRLAB_WORKERS"


class ConfigManager:
    """Singleton class to manage configuration."""
    _instance = None
    _config = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super(ConfigManager, cls).__new__(cls)
            cls._instance._load_config()
        return cls._instance

    @staticmethod
    def config_path() -> Path:
        """Path of the YAML file to load, honouring ``IRRLAB_CONFIG``."""
        override = os.environ.get(CONFIG_ENV_VAR)
        if override:
            return Path(override)
        return Path(__file__).parent.parent.parent / 'conf' / 'irrlab.yaml'

    def _load_config(self):
        """Load configuration from YAML file."""
        if self._config is None:
            try:
                config_path = self.config_path()
                with config_path.open('r') as f:
                    self._config = yaml.safe_load(f) or {}
                logger.debug(f"Configuration loaded from {config_path}")
            except Exception as e:
                logger.error(f"Failed to load configuration file: {e}")
                raise Exception(f"Failed to load configuration file: {e}")

    @property
    def config(self):
        """Get the configuration dictionary."""
        return self._config

    def get(self, *keys):
        """Get a configuration value using nested keys."""
        value = self._config
        for key in keys:
            if not isinstance(value, dict) or key not in value:
                return None
            value = value[key]
        return value

    def get_or(self, default: Any, *keys) -> Any:
        """Like :meth:`get` but returns ``default`` for missing keys."""
        value = self.get(*keys)
        return default if value is None else value

    def workers(self) -> int:
        """Worker count, with ``IRRLAB_WORKERS`` taking precedence."""
        override = os.environ.get(WORKERS_ENV_VAR)
        if override:
            try:
                return max(1, int(override))
            except ValueError:
                logger.warning(f"Ignoring non-integer {WORKERS_ENV_VAR}={override!r}")
        return max(1, int(self.get_or(1, 'runtime', 'workers')))


@dataclass(frozen=True)
class EnumerationBudgets:
    """Hard limits on the corpora the library agrees to enumerate."""
    tree_max_order: int = 14
    bipartite_max_cells: int = 25
    connected_max_order: int = 7
    hamiltonian_max_order: int = 12
    certificate_max_order: int = 12


@dataclass(frozen=True)
class VerificationSettings:
    """Numeric and semantic knobs for claim evaluation.

    Library code receives this object explicitly; only the CLI builds it
    from :class:`ConfigManager`.
    """
    tolerance: float = 1e-9
    decimal_precision: int = 60
    extremum_reading: str = "class"
    sigma2_mode: str = "standard"
    budgets: EnumerationBudgets = EnumerationBudgets()

    def __post_init__(self):
        if self.extremum_reading not in ("class", "per_graph"):
            raise ValueError(f"Unknown extremum reading: {self.extremum_reading}")
        if self.sigma2_mode not in ("standard", "literal"):
            raise ValueError(f"Unknown sigma2 mode: {self.sigma2_mode}")

    @classmethod
    def from_config(cls, config: Optional[ConfigManager] = None, **overrides) -> "VerificationSettings":
        """Build settings from the configuration file plus explicit overrides.

        Args:
            config: Loaded configuration (defaults to the singleton)
            **overrides: Field values that win over the file, ``None`` ignored

        Returns:
            VerificationSettings instance
        """
        config = config or ConfigManager()
        defaults = cls()
        budgets = EnumerationBudgets(**{
            name: int(config.get_or(getattr(defaults.budgets, name), 'budgets', name))
            for name in EnumerationBudgets.__dataclass_fields__
        })
        values = {
            'tolerance': float(config.get_or(defaults.tolerance, 'verification', 'tolerance')),
            'decimal_precision': int(config.get_or(defaults.decimal_precision, 'verification', 'decimal_precision')),
            'extremum_reading': config.get_or(defaults.extremum_reading, 'verification', 'extremum_reading'),
            'sigma2_mode': config.get_or(defaults.sigma2_mode, 'verification', 'sigma2_mode'),
            'budgets': budgets,
        }
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)

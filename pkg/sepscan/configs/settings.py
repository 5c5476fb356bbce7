"""Application configuration."""

from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    """Application settings."""

    app_name: str = "sepscan"
    app_version: str = "0.1.0"
    app_description: str = (
        "Decides which subsystems of a pure n-qubit state are partially separable"
    )

    # Size caps
    max_qubits: int = 12
    hard_max_qubits: int = 14
    density_max_qubits: int = 10
    component_check_max_qubits: int = 6

    # Numeric thresholds
    tolerance: float = 1e-9
    normalization_tolerance: float = 1e-6
    marginal_ceiling: float = 1e-6
    oracle_cutoff: float = 1e-9

    # Table generation
    table_draws: int = 100

    log_level: str = "WARNING"

    class Config:
        """Configuration settings."""

        env_file = ".env"
        env_prefix = "SEPSCAN_"
        case_sensitive = False


# Global settings instance
settings = Settings()

from pathlib import Path

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class TrainingDefaults(BaseSettings):
    """Defaults for experience-replay training when a config file omits them."""
    eta: float = Field(0.001, gt=0)
    batch_size: int = Field(32, ge=1)
    replay_capacity: int = Field(100_000, ge=1)
    episodes_per_block: int = Field(200, ge=1)
    epochs_per_block: int = Field(1, ge=1)
    eval_episodes: int = Field(200, ge=1)


class Settings(BaseSettings):
    """Main application settings."""
    model_config = SettingsConfigDict(
        env_prefix="DRRN_",
        env_file=".env",
        env_file_encoding="utf-8",
        env_nested_delimiter="__",
        case_sensitive=False,
        extra="ignore",
    )

    # General settings
    environment: str = "development"
    debug: bool = False
    project_name: str = "DRRN Text Games"

    # Logging settings
    logs_dir: str = "logs"  # Can be relative or absolute path
    log_output: str = "console"  # Options: "file", "console", "both"

    # Parallel seed workers used by `train`
    workers: int = Field(1, ge=1)

    training: TrainingDefaults = TrainingDefaults()

    @property
    def project_root(self) -> Path:
        """
        Returns the absolute path to the project root directory.
        """
        return Path(__file__).resolve().parent.parent.parent.parent

    @property
    def logs_path(self) -> Path:
        """
        Returns the absolute path to the logs directory.
        If logs_dir is an absolute path, returns it as is.
        If logs_dir is a relative path, resolves it relative to project_root.
        """
        logs_dir_path = Path(self.logs_dir)
        if logs_dir_path.is_absolute():
            return logs_dir_path
        return self.project_root / self.logs_dir

    @property
    def data_path(self) -> Path:
        """
        Returns the directory holding the bundled games, paraphrase maps and configs.
        """
        return Path(__file__).resolve().parent.parent.parent / "data"


settings = Settings()

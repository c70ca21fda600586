from pydantic_settings import BaseSettings, SettingsConfigDict
from pydantic import Field
from functools import lru_cache
from pathlib import Path
from dotenv import load_dotenv


class Config(BaseSettings):
    log_level: str = "WARNING"
    check_every_step: bool = Field(False, description="Validate the working split after every augmentation")
    oracle_max_vertices: int = 24
    centered_oracle_max_vertices: int = 20
    fuzz_workers: int = 1
    bench_edge_factor: float = 4.0
    default_seed: int = 0

    model_config = SettingsConfigDict(
        env_file=str(Path(__file__).parent.parent.parent.parent / ".env"),
        protected_namespaces=('settings_',),
        env_prefix="FOURTREE_",
        case_sensitive=False,
        extra="ignore"
    )


@lru_cache(maxsize=1)
def get_config() -> Config:
    """Process-wide settings, read once from the environment and .env"""
    load_dotenv()
    return Config()

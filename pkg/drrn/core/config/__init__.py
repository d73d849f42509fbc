from .settings import settings, Settings, TrainingDefaults

__all__ = [
    "settings",
    "Settings",
    "TrainingDefaults",
]

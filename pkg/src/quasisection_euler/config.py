from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    # верхняя граница числа конфигураций при полном переборе оракула
    ENUMERATION_CAP: int = 10**8
    # допуск для float-геометрии окружностей (умножается на масштаб разбиения)
    GEOMETRY_MARGIN: float = 1e-9
    UNIQUENESS_CUTOFF: int = 6
    SAMPLE_SEED: int = 7
    SVG_SIZE: int = 480
    LOG_LEVEL: str = "WARNING"

    class Config:
        env_file = ".env"
        env_prefix = "QSE_"


settings = Settings()

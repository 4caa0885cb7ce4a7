class QuasisectionError(ValueError):
    """Базовая ошибка входных данных (маппится в HTTP 400 / exit code 2)."""


class RationalParseError(QuasisectionError):
    pass


class PortraitError(QuasisectionError):
    pass


class EnumerationTooLarge(QuasisectionError):
    pass


class DegenerateArrangement(QuasisectionError):
    pass


class UnknownGalleryEntry(QuasisectionError):
    pass


class InvariantBreach(RuntimeError):
    """Нарушен внутренний инвариант: это баг, а не плохой ввод."""

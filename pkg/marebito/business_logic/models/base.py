from .mixins.serializable import SerializableMixin


class BaseDataclass(SerializableMixin):
    """Common behaviour of domain dataclasses. Not a dataclass itself, so subclasses may be frozen."""

from abc import ABC, abstractmethod
from typing import Any, Type

from topology import VertexAllocator

from .base import GadgetError, LabeledGadget


class GadgetBuilder(ABC):
    name: str = "base"
    description: str = ""
    parameters: tuple[str, ...] = ()

    def __init__(self, config: dict[str, Any] | None = None):
        self.config = dict(config or {})
        unknown = set(self.config) - set(self.parameters)
        if unknown:
            raise GadgetError(f"{self.name} does not take parameter {sorted(unknown)[0]!r}", code="usage")

    def int_param(self, key: str, default: int | None = None) -> int:
        value = self.config.get(key, default)
        if value is None:
            raise GadgetError(f"{self.name} needs parameter {key!r}", code="usage")
        try:
            return int(value)
        except (TypeError, ValueError):
            raise GadgetError(f"{self.name}: {key}={value!r} is not an integer", code="usage") from None

    @abstractmethod
    def build(self, allocator: VertexAllocator | None = None) -> LabeledGadget:
        """Construct the gadget; vertex ids come from ``allocator`` when given, else from 0."""
        pass


class GadgetRegistry:
    _builders: dict[str, Type[GadgetBuilder]] = {}

    @classmethod
    def register(cls, name: str | None = None):
        def decorator(builder_cls: Type[GadgetBuilder]):
            builder_name = name or builder_cls.name
            cls._builders[builder_name] = builder_cls
            return builder_cls
        return decorator

    @classmethod
    def get(cls, name: str) -> Type[GadgetBuilder] | None:
        return cls._builders.get(name)

    @classmethod
    def create(cls, name: str, config: dict[str, Any] | None = None) -> GadgetBuilder | None:
        builder_cls = cls.get(name)
        if builder_cls is None:
            return None
        return builder_cls(config)

    @classmethod
    def build(cls, name: str, config: dict[str, Any] | None = None) -> LabeledGadget:
        builder = cls.create(name, config)
        if builder is None:
            raise GadgetError(
                f"unknown gadget {name!r}; choose from {', '.join(cls.list_gadgets())}", code="usage"
            )
        return builder.build()

    @classmethod
    def list_gadgets(cls) -> list[str]:
        return sorted(cls._builders)

"""Model registry for discovering and accessing rotational models."""

from typing import Dict, Type, Union

from qrotor.core.base import BaseModel
from qrotor.core.types import ModelKind


class ModelRegistry:
    """Registry for spectral model classes."""

    _models: Dict[ModelKind, Type[BaseModel]] = {}

    @classmethod
    def register(cls, kind: ModelKind):
        """Decorator to register a model class.

        Args:
            kind: Model the class implements.

        Returns:
            Decorator function.
        """
        def decorator(model_cls: Type[BaseModel]):
            cls._models[kind] = model_cls
            model_cls.kind = kind
            return model_cls
        return decorator

    @classmethod
    def get(cls, kind: Union[ModelKind, str]) -> Type[BaseModel]:
        """Get a model class by kind or flag ("I", "Ip", ...).

        Raises:
            KeyError: If the model is not registered.
        """
        try:
            kind = ModelKind(kind)
        except ValueError:
            raise KeyError(
                f"Unknown model: '{kind}'. "
                f"Available: {[k.value for k in cls._models]}"
            ) from None
        if kind not in cls._models:
            raise KeyError(
                f"Unknown model: '{kind.value}'. "
                f"Available: {[k.value for k in cls._models]}"
            )
        return cls._models[kind]

    @classmethod
    def list_models(cls) -> Dict[ModelKind, Type[BaseModel]]:
        """Return all registered models in ModelKind order."""
        return {kind: cls._models[kind] for kind in ModelKind if kind in cls._models}


def get_model(kind: Union[ModelKind, str]) -> BaseModel:
    """Convenience function to get a model instance."""
    return ModelRegistry.get(kind)()

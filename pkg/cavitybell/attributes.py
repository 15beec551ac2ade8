"""
cavitybell attributes

Typed descriptors for flat ``key = value`` configuration records.
"""
import math
from inspect import getmembers
from typing import Any, Callable, Dict, Generic, Optional, Sequence, Type, TypeVar, Union, overload

from cavitybell.exceptions import AttributeDeserializationError, AttributeNullError
from cavitybell.constants import FLOAT_FORMAT

_T = TypeVar('_T')
_A = TypeVar('_A', bound='Attribute')
_ACT = TypeVar('_ACT', bound='AttributeContainer')

TRUE_STRINGS = ('1', 'true', 'yes', 'on')
FALSE_STRINGS = ('0', 'false', 'no', 'off')


class Attribute(Generic[_T]):
    """
    A field of a configuration record
    """
    attr_type: str
    null = False

    def __init__(
        self,
        null: Optional[bool] = None,
        default: Optional[Union[_T, Callable[..., _T]]] = None,
        attr_name: Optional[str] = None,
        help: Optional[str] = None,
    ) -> None:
        self.default = default
        if null is not None:
            self.null = null
        self.help = help
        # __set_name__ will ensure this is a string
        self._attr_name: str = attr_name  # type: ignore

    @property
    def attr_name(self) -> str:
        return self._attr_name

    @attr_name.setter
    def attr_name(self, value: str) -> None:
        self._attr_name = value

    def __set__(self, instance: Any, value: Optional[_T]) -> None:
        if instance:
            attr_name = instance._config_to_python_attrs.get(self.attr_name, self.attr_name)
            if value is not None:
                self.validate(value)
            instance.attribute_values[attr_name] = value

    @overload
    def __get__(self: _A, instance: None, owner: Any) -> _A: ...

    @overload
    def __get__(self: _A, instance: Any, owner: Any) -> _T: ...

    def __get__(self: _A, instance: Any, owner: Any) -> Union[_A, _T]:
        if instance:
            attr_name = instance._config_to_python_attrs.get(self.attr_name, self.attr_name)
            return instance.attribute_values.get(attr_name, None)
        return self

    def __set_name__(self, owner: Type[Any], name: str) -> None:
        self.attr_name = self.attr_name or name

    def serialize(self, value: Any) -> str:
        """
        Returns the text written to configuration echoes
        """
        return str(value)

    def deserialize(self, value: str) -> Any:
        """
        Parses a raw configuration string
        """
        return value

    def validate(self, value: Any) -> None:
        """
        Raises AttributeDeserializationError when ``value`` is out of range for this field
        """

    def _fail(self, value: Any, reason: Optional[str] = None) -> AttributeDeserializationError:
        return AttributeDeserializationError(self.attr_name, value, reason)


class UnicodeAttribute(Attribute[str]):
    """
    A free text attribute
    """
    attr_type = 'string'

    def deserialize(self, value):
        return value.strip()


class BooleanAttribute(Attribute[bool]):
    """
    A class for boolean attributes
    """
    attr_type = 'boolean'

    def serialize(self, value):
        return '1' if value else '0'

    def deserialize(self, value):
        if isinstance(value, bool):
            return value
        text = str(value).strip().lower()
        if text in TRUE_STRINGS:
            return True
        if text in FALSE_STRINGS:
            return False
        raise self._fail(value, "expected one of {}".format(', '.join(TRUE_STRINGS + FALSE_STRINGS)))


class FloatAttribute(Attribute[float]):
    """
    A finite real number, optionally bounded below
    """
    attr_type = 'float'

    def __init__(self, minimum: Optional[float] = None, exclusive_minimum: bool = False, **kwargs: Any) -> None:
        super().__init__(**kwargs)
        self.minimum = minimum
        self.exclusive_minimum = exclusive_minimum

    def serialize(self, value):
        return FLOAT_FORMAT.format(value)

    def deserialize(self, value):
        try:
            return float(value)
        except (TypeError, ValueError):
            raise self._fail(value, "not a number")

    def validate(self, value):
        if not math.isfinite(value):
            raise self._fail(value, "must be finite")
        if self.minimum is None:
            return
        if self.exclusive_minimum and value <= self.minimum:
            raise self._fail(value, "must be greater than {}".format(self.minimum))
        if value < self.minimum:
            raise self._fail(value, "must be at least {}".format(self.minimum))


class IntegerAttribute(Attribute[int]):
    """
    An integer, optionally bounded below
    """
    attr_type = 'integer'

    def __init__(self, minimum: Optional[int] = None, **kwargs: Any) -> None:
        super().__init__(**kwargs)
        self.minimum = minimum

    def deserialize(self, value):
        try:
            return int(str(value).strip())
        except ValueError:
            raise self._fail(value, "not an integer")

    def validate(self, value):
        if self.minimum is not None and value < self.minimum:
            raise self._fail(value, "must be at least {}".format(self.minimum))


class ChoiceAttribute(Attribute[str]):
    """
    One of a fixed set of names
    """
    attr_type = 'choice'

    def __init__(self, choices: Sequence[str], **kwargs: Any) -> None:
        super().__init__(**kwargs)
        self.choices = tuple(choices)

    def deserialize(self, value):
        return value.strip().lower()

    def validate(self, value):
        if value not in self.choices:
            raise self._fail(value, "expected one of {}".format(', '.join(self.choices)))


class AttributeContainerMeta(type):

    def __init__(self, name, bases, namespace):
        super().__init__(name, bases, namespace)
        AttributeContainerMeta._initialize_attributes(self)

    @staticmethod
    def _initialize_attributes(cls):
        """
        Initialize attributes on the class.
        """
        cls._attributes = {}
        cls._config_to_python_attrs = {}

        for name, attribute in getmembers(cls, lambda o: isinstance(o, Attribute)):
            cls._attributes[name] = attribute
            if attribute.attr_name != name:
                cls._config_to_python_attrs[attribute.attr_name] = name


class AttributeContainer(metaclass=AttributeContainerMeta):

    def __init__(self, **attributes: Any) -> None:
        # Values are stored under the python attribute name by the Attribute descriptors
        self.attribute_values: Dict[str, Any] = {}
        self._set_defaults()
        self._set_attributes(**attributes)

    @classmethod
    def get_attributes(cls) -> Dict[str, Attribute]:
        """
        Returns the attributes of this class as a mapping from `python_attr_name` => `attribute`.
        """
        return cls._attributes  # type: ignore

    @classmethod
    def _config_to_python_attr(cls, config_key: str) -> str:
        """
        Convert a configuration key (for instance ``sigma-x1``) to the internal Python name.
        """
        return cls._config_to_python_attrs.get(config_key, config_key)  # type: ignore

    def _set_defaults(self) -> None:
        """
        Sets fields that provide a default value
        """
        for name, attr in self.get_attributes().items():
            value = attr.default() if callable(attr.default) else attr.default
            if value is not None:
                setattr(self, name, value)

    def _set_attributes(self, **attributes: Any) -> None:
        """
        Sets the attributes for this object
        """
        for attr_name, attr_value in attributes.items():
            if attr_name not in self.get_attributes():
                raise ValueError("Attribute {} specified does not exist".format(attr_name))
            setattr(self, attr_name, attr_value)

    def serialize(self, null_check: bool = True) -> Dict[str, str]:
        """
        Returns the record as ``{config key: text}``, sorted by key
        """
        values: Dict[str, str] = {}
        for name, attr in self.get_attributes().items():
            value = getattr(self, name)
            if value is None:
                if null_check and not attr.null:
                    raise AttributeNullError(attr.attr_name)
                continue
            values[attr.attr_name] = attr.serialize(value)
        return dict(sorted(values.items()))

    def deserialize(self, raw_values: Dict[str, str]) -> None:
        """
        Sets attributes from raw strings keyed by configuration key
        """
        for key, raw in raw_values.items():
            name = self._config_to_python_attr(key)
            attr = self.get_attributes().get(name)
            if attr is None or attr.attr_name != key:
                raise AttributeDeserializationError(key, raw, "unknown field")
            setattr(self, name, attr.deserialize(raw))

    @classmethod
    def from_raw(cls: Type[_ACT], raw_values: Dict[str, str]) -> _ACT:
        instance = cls()
        instance.deserialize(raw_values)
        return instance

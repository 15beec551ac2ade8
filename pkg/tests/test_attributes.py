"""
cavitybell attributes tests
"""
import pytest

from cavitybell.attributes import (
    AttributeContainer, BooleanAttribute, ChoiceAttribute, FloatAttribute, IntegerAttribute, UnicodeAttribute,
)
from cavitybell.exceptions import AttributeDeserializationError, AttributeNullError, ConfigError


class AttributeTestRecord(AttributeContainer):
    name = UnicodeAttribute(default='run')
    enabled = BooleanAttribute(default=False)
    width = FloatAttribute(minimum=0.0, exclusive_minimum=True, null=True, attr_name='sigma-x')
    count = IntegerAttribute(minimum=2, default=lambda: 3)
    mode = ChoiceAttribute(('sg', 'jc'), default='sg')
    required = FloatAttribute()


class TestAttributeDescriptor:
    """
    Test Attribute Descriptors
    """
    def setup_method(self):
        self.instance = AttributeTestRecord()

    def test_defaults(self):
        assert self.instance.name == 'run'
        assert self.instance.enabled is False
        assert self.instance.width is None
        assert self.instance.count == 3

    def test_custom_name(self):
        assert AttributeTestRecord.width.attr_name == 'sigma-x'
        assert AttributeTestRecord._config_to_python_attr('sigma-x') == 'width'
        self.instance.width = 2.0
        assert self.instance.attribute_values['width'] == 2.0

    def test_validates_on_set(self):
        with pytest.raises(AttributeDeserializationError) as e:
            self.instance.count = 1
        assert e.value.attr_name == 'count'

    def test_class_access(self):
        assert isinstance(AttributeTestRecord.mode, ChoiceAttribute)

    def test_unknown_keyword(self):
        with pytest.raises(ValueError):
            AttributeTestRecord(nope=1)


class TestFloatAttribute:

    def test_deserialize(self):
        assert FloatAttribute().deserialize('1e-26') == 1e-26

    def test_serialize(self):
        assert FloatAttribute().serialize(0.1) == '1.0000000000000001e-01'

    @pytest.mark.parametrize('value', ['abc', None])
    def test_not_a_number(self, value):
        with pytest.raises(AttributeDeserializationError):
            FloatAttribute(attr_name='mass').deserialize(value)

    @pytest.mark.parametrize('value', [float('inf'), float('nan')])
    def test_finite(self, value):
        with pytest.raises(AttributeDeserializationError):
            FloatAttribute(attr_name='mass').validate(value)

    def test_exclusive_minimum(self):
        attr = FloatAttribute(minimum=0.0, exclusive_minimum=True, attr_name='mass')
        with pytest.raises(AttributeDeserializationError) as e:
            attr.validate(0.0)
        assert "'mass'" in str(e.value)
        FloatAttribute(minimum=0.0, attr_name='t').validate(0.0)


class TestBooleanAttribute:

    @pytest.mark.parametrize('raw,expected', [('1', True), ('yes', True), ('True', True), ('off', False)])
    def test_deserialize(self, raw, expected):
        assert BooleanAttribute().deserialize(raw) is expected

    def test_serialize(self):
        assert BooleanAttribute().serialize(True) == '1'
        assert BooleanAttribute().serialize(False) == '0'

    def test_invalid(self):
        with pytest.raises(AttributeDeserializationError):
            BooleanAttribute(attr_name='svg').deserialize('maybe')


class TestIntegerAttribute:

    def test_deserialize(self):
        assert IntegerAttribute().deserialize(' 201 ') == 201

    def test_invalid(self):
        with pytest.raises(AttributeDeserializationError):
            IntegerAttribute(attr_name='steps').deserialize('2.5')


class TestChoiceAttribute:

    def test_normalizes_case(self):
        assert ChoiceAttribute(('sg', 'jc')).deserialize(' SG ') == 'sg'

    def test_invalid(self):
        with pytest.raises(AttributeDeserializationError) as e:
            ChoiceAttribute(('sg', 'jc'), attr_name='model').validate('xx')
        assert 'sg, jc' in str(e.value)


class TestAttributeContainer:

    def test_get_attributes(self):
        assert set(AttributeTestRecord.get_attributes()) == {'name', 'enabled', 'width', 'count', 'mode', 'required'}

    def test_serialize_null_check(self):
        with pytest.raises(AttributeNullError) as e:
            AttributeTestRecord().serialize()
        assert e.value.attr_name == 'required'
        assert isinstance(e.value, ConfigError)

    def test_serialize(self):
        record = AttributeTestRecord(required=1.5, width=0.5)
        assert record.serialize() == {
            'count': '3',
            'enabled': '0',
            'mode': 'sg',
            'name': 'run',
            'required': '1.5000000000000000e+00',
            'sigma-x': '5.0000000000000000e-01',
        }

    def test_serialize_skips_nulls(self):
        assert 'required' not in AttributeTestRecord().serialize(null_check=False)

    def test_deserialize(self):
        record = AttributeTestRecord.from_raw({'sigma-x': '2e-6', 'mode': 'jc', 'enabled': 'yes'})
        assert record.width == 2e-6
        assert record.mode == 'jc'
        assert record.enabled is True

    def test_deserialize_unknown_key(self):
        with pytest.raises(AttributeDeserializationError) as e:
            AttributeTestRecord().deserialize({'sigma_x': '1'})
        assert 'unknown field' in str(e.value)

from rest_framework import serializers

from .models import StoredCountTable
from .services.complexity_service import Alphabet
from .services.exceptions import InvalidInputError
from .services.input_service import FORMAT_SYMBOLS, FORMATS, decode
from .services.table_io_service import table_to_dict


class SequenceInputSerializer(serializers.Serializer):
    """A sequence as text (symbols format) or hex-encoded bytes (bits and bytes formats)"""
    sequence = serializers.CharField()
    alphabet = serializers.CharField(required=False, default='01')
    alphabet_size = serializers.IntegerField(required=False, min_value=1)
    format = serializers.ChoiceField(choices=FORMATS, default=FORMAT_SYMBOLS)

    def validate(self, attrs):
        fmt = attrs['format']
        try:
            if 'alphabet_size' in attrs:
                alphabet = Alphabet.of_size(attrs['alphabet_size'])
            else:
                alphabet = Alphabet.from_tokens(attrs['alphabet'])
            if fmt == FORMAT_SYMBOLS:
                raw = attrs['sequence'].encode('utf-8')
            else:
                try:
                    raw = bytes.fromhex(attrs['sequence'])
                except ValueError:
                    raise serializers.ValidationError({'sequence': 'Expected hex-encoded bytes for this format'})
            attrs['parsed'] = decode(raw, fmt, alphabet)
        except InvalidInputError as e:
            raise serializers.ValidationError({'sequence': str(e)})
        return attrs


class RandomnessTestInputSerializer(SequenceInputSerializer):
    """Sequence plus an optional explicit critical-set threshold"""
    threshold = serializers.IntegerField(required=False, min_value=1)


class VerifyRequestSerializer(serializers.Serializer):
    alphabet_size = serializers.IntegerField(min_value=2)
    n_max = serializers.IntegerField(min_value=1)


class StoredCountTableSerializer(serializers.ModelSerializer):
    """Summary row for the table listing"""
    class Meta:
        model = StoredCountTable
        fields = ['id', 'alphabet_size', 'length', 'total', 'created_at', 'updated_at']
        read_only_fields = fields


class StoredCountTableDetailSerializer(StoredCountTableSerializer):
    """Stored table with counts and exact PMF/CDF values"""
    distribution = serializers.SerializerMethodField()

    class Meta(StoredCountTableSerializer.Meta):
        fields = StoredCountTableSerializer.Meta.fields + ['distribution']
        read_only_fields = fields

    def get_distribution(self, obj):
        return table_to_dict(obj.to_count_table())

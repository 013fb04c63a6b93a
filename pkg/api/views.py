from rest_framework import status, generics
from rest_framework.decorators import api_view, permission_classes
from rest_framework.response import Response
from rest_framework.permissions import AllowAny
from django.conf import settings
from django.shortcuts import get_object_or_404
import logging

from .models import StoredCountTable
from .serializers import (
    SequenceInputSerializer, RandomnessTestInputSerializer, VerifyRequestSerializer,
    StoredCountTableSerializer, StoredCountTableDetailSerializer,
)
from .services.complexity_service import describe
from .services.distribution_service import DistributionService
from .services.exceptions import ComplexityError, ResourceLimitError
from .services.randomness_service import CriticalSetSpec, RandomnessTestService
from .services.table_io_service import report_to_dict

logger = logging.getLogger(__name__)


def error_response(error):
    """Map a service error to an HTTP error response"""
    code = status.HTTP_422_UNPROCESSABLE_ENTITY if isinstance(error, ResourceLimitError) else status.HTTP_400_BAD_REQUEST
    return Response({'error': str(error)}, status=code)


@api_view(['POST'])
@permission_classes([AllowAny])
def complexity_view(request):
    """Exhaustive history, complexity and exactness of one sequence"""
    serializer = SequenceInputSerializer(data=request.data)
    if not serializer.is_valid():
        return Response(serializer.errors, status=status.HTTP_400_BAD_REQUEST)
    try:
        return Response(describe(serializer.validated_data['parsed']), status=status.HTTP_200_OK)
    except ComplexityError as e:
        return error_response(e)


@api_view(['POST'])
@permission_classes([AllowAny])
def randomness_test_view(request):
    """Critical-set verdict; significance comes from stored tables when present"""
    serializer = RandomnessTestInputSerializer(data=request.data)
    if not serializer.is_valid():
        return Response(serializer.errors, status=status.HTTP_400_BAD_REQUEST)

    sequence = serializer.validated_data['parsed']
    threshold = serializer.validated_data.get('threshold')
    try:
        spec = None
        if threshold is not None:
            spec = CriticalSetSpec(alphabet_size=sequence.alphabet.size, length=len(sequence), threshold_k=threshold)
        verdict = RandomnessTestService(table_sources=[StoredCountTable.load]).test_sequence(sequence, spec)
    except ComplexityError as e:
        return error_response(e)
    return Response(verdict.to_dict(), status=status.HTTP_200_OK)


@api_view(['POST'])
@permission_classes([AllowAny])
def verify_view(request):
    """Enumerate tables up to n_max and run every identity check"""
    serializer = VerifyRequestSerializer(data=request.data)
    if not serializer.is_valid():
        return Response(serializer.errors, status=status.HTTP_400_BAD_REQUEST)

    service = DistributionService(budget=settings.LZ_API_ENUMERATION_BUDGET, workers=1)
    try:
        report = service.build_report(
            serializer.validated_data['alphabet_size'],
            serializer.validated_data['n_max'],
        )
    except ComplexityError as e:
        return error_response(e)
    except Exception as e:
        logger.error(f"Error verifying identities: {e}")
        return Response({'error': 'Verification failed'}, status=status.HTTP_500_INTERNAL_SERVER_ERROR)

    document = report_to_dict(report.tables, report.identity_results)
    document['passed'] = report.passed
    return Response(document, status=status.HTTP_200_OK)


class StoredCountTableListView(generics.ListAPIView):
    """List stored count tables, optionally filtered by alphabet size"""
    serializer_class = StoredCountTableSerializer
    permission_classes = [AllowAny]

    def get_queryset(self):
        queryset = StoredCountTable.objects.all()
        alphabet_size = self.request.query_params.get('alphabet_size')
        if alphabet_size:
            queryset = queryset.filter(alphabet_size=alphabet_size)
        return queryset.order_by('alphabet_size', 'length')


class StoredCountTableDetailView(generics.RetrieveAPIView):
    """One stored table with its distribution"""
    serializer_class = StoredCountTableDetailSerializer
    permission_classes = [AllowAny]

    def get_object(self):
        return get_object_or_404(
            StoredCountTable,
            alphabet_size=self.kwargs['alphabet_size'],
            length=self.kwargs['length'],
        )

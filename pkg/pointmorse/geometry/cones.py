import logging
from typing import Optional, Sequence

from pointmorse.Kernel import Kernel
from pointmorse.geometry.ConeTestResult import ConeOutcome, ConeTestResult
from pointmorse.geometry._validation import check_points
from pointmorse.linalg import combine, dot, rank_and_basis
from pointmorse.linalg.scalars import Scalar, Vector
from pointmorse.lp import LinearProgram, LPOutcome, solve_lp

logger = logging.getLogger(__name__)


def positive_span_test(
    vectors: Sequence[Sequence[Scalar]], kernel: Optional[Kernel] = None
) -> ConeTestResult:
    R"""
    Decides whether the vectors :math:`a_1, \ldots, a_k` positively span
    their linear span :math:`W`, or whether there is a certificate: a
    nonzero :math:`v \in W` with :math:`\langle v, a_i \rangle \le 0` for
    all :math:`i`. Exactly one of the two holds when the origin lies in the
    convex hull of the vectors.

    Two linear programs decide the question independently:

    1. The relative interior program maximises :math:`t` subject to
       :math:`\sum_i \lambda_i a_i = 0`, :math:`\sum_i \lambda_i = 1` and
       :math:`\lambda_i \ge t`. A positive optimum places the origin in the
       relative interior of the hull, so the vectors positively span
       :math:`W`.
    2. The certificate program searches :math:`v = \sum_j \mu_j b_j` over a
       basis :math:`b_j` of :math:`W`, with :math:`\langle v, a_i \rangle
       \le 0` for all :math:`i` and :math:`\sum_i \langle v, a_i \rangle =
       -1`. It is feasible exactly when a certificate exists.

    The two outcomes are checked against each other, and the returned
    certificate or margin is verified by substitution.

    Parameters
    ----------
    vectors
        Nonempty sequence of vectors of a common dimension.
    kernel
        Optional number kernel. Exact when not passed.

    Raises
    ------
    ValueError
        When the vectors are empty or of different dimensions.
    RuntimeError
        When the two programs disagree, or the result fails verification.
        Neither happens in exact mode.

    Returns
    -------
    ConeTestResult
        The outcome, with the margin :math:`t^*` or the certificate
        :math:`v`. When the origin is outside the convex hull of the vectors
        a certificate is returned with ``outside_hull`` set.
    """
    if kernel is None:
        kernel = Kernel()

    check_points(vectors)
    vectors = [kernel.vector(vector) for vector in vectors]
    span = rank_and_basis(vectors, kernel)

    relint = _relint_program(vectors, kernel)
    certificate = _certificate_program(vectors, span.basis, kernel)

    outside_hull = relint.is_infeasible
    spans = relint.is_optimal and kernel.sign(relint.objective_value, 1) > 0

    if outside_hull:
        logger.warning("Origin outside the convex hull of the cone vectors.")

    if spans == (certificate is not None):
        raise RuntimeError(
            "Relative interior and certificate programs disagree: "
            f"margin {relint.objective_value}, certificate {certificate}."
        )

    if spans:
        result = ConeTestResult(
            ConeOutcome.POSITIVELY_SPANS,
            span.dim,
            margin=relint.objective_value,
        )
    else:
        result = ConeTestResult(
            ConeOutcome.CERTIFICATE,
            span.dim,
            certificate=certificate,
            outside_hull=outside_hull,
        )

    _verify(result, vectors, kernel)
    return result


def _relint_program(vectors: Sequence[Vector], kernel: Kernel) -> LPOutcome:
    num_vectors = len(vectors)
    dim = len(vectors[0])

    # Variables are lambda_1, ..., lambda_k, followed by the free t.
    constraints = [
        ([vector[k] for vector in vectors] + [0], "==", 0)
        for k in range(dim)
    ]
    constraints.append(([1] * num_vectors + [0], "==", 1))

    for idx in range(num_vectors):
        row = [0] * (num_vectors + 1)
        row[idx], row[-1] = 1, -1
        constraints.append((row, ">=", 0))

    objective = [0] * num_vectors + [1]
    bounds = [0] * num_vectors + [None]
    return solve_lp(LinearProgram(objective, constraints, bounds), kernel)


def _certificate_program(
    vectors: Sequence[Vector], basis: Sequence[Vector], kernel: Kernel
) -> Optional[Vector]:
    if not basis:  # the span is the zero space
        return None

    # Row i holds the inner products <b_j, a_i>, for the free variables mu.
    rows = [[dot(b, a) for b in basis] for a in vectors]
    constraints = [(row, "<=", 0) for row in rows]
    totals = [sum(column, kernel.zero) for column in zip(*rows)]
    constraints.append((totals, "==", -1))

    lp = LinearProgram([0] * len(basis), constraints, [None] * len(basis))
    res = solve_lp(lp, kernel)

    if not res.is_optimal:
        return None

    return combine(res.primal, basis)


def _verify(
    result: ConeTestResult, vectors: Sequence[Vector], kernel: Kernel
):
    if result.positively_spans:
        if kernel.sign(result.margin, 1) <= 0:
            raise RuntimeError(f"Margin {result.margin} not positive.")

        return

    v = result.certificate
    scale = max(abs(a) for vector in vectors for a in vector)
    scale *= max(abs(a) for a in v)

    if all(kernel.is_zero(a, scale) for a in v):
        raise RuntimeError("Zero certificate.")

    for vector in vectors:
        if kernel.sign(dot(v, vector), scale) > 0:
            raise RuntimeError(f"Certificate {v} fails against {vector}.")

from fractions import Fraction
from math import gcd, lcm
from typing import List, Sequence

from pointmorse.linalg.scalars import Scalar, Vector


def add(first: Sequence[Scalar], second: Sequence[Scalar]) -> Vector:
    return tuple(a + b for a, b in zip(first, second))


def sub(first: Sequence[Scalar], second: Sequence[Scalar]) -> Vector:
    return tuple(a - b for a, b in zip(first, second))


def scale(factor: Scalar, vector: Sequence[Scalar]) -> Vector:
    return tuple(factor * a for a in vector)


def dot(first: Sequence[Scalar], second: Sequence[Scalar]) -> Scalar:
    return sum((a * b for a, b in zip(first, second)), 0 * first[0])


def squared_norm(vector: Sequence[Scalar]) -> Scalar:
    return dot(vector, vector)


def squared_dist(first: Sequence[Scalar], second: Sequence[Scalar]) -> Scalar:
    return squared_norm(sub(first, second))


def combine(
    weights: Sequence[Scalar], vectors: Sequence[Sequence[Scalar]]
) -> Vector:
    """
    Linear combination ``sum_i weights[i] * vectors[i]``.
    """
    total = [0 * vectors[0][0]] * len(vectors[0])

    for weight, vector in zip(weights, vectors):
        for idx, value in enumerate(vector):
            total[idx] += weight * value

    return tuple(total)


def integer_row(vector: Sequence[Fraction]) -> List[int]:
    """
    Scales a rational vector by the least common multiple of its
    denominators, and divides out the content, giving a primitive integer
    vector spanning the same line.
    """
    denominator = lcm(*(Fraction(a).denominator for a in vector))
    row = [int(Fraction(a) * denominator) for a in vector]
    return primitive(row)


def primitive(row: List[int]) -> List[int]:
    content = gcd(*row)
    return [a // content for a in row] if content > 1 else row

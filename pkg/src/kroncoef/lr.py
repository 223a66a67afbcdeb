"""Littlewood-Richardson coefficients by direct symbol placement.

The count enumerates the ways to grow the first diagram by the rows of the
second, one row at a time, keeping a partition shape throughout.  The boxes
added for a single row must occupy distinct columns (a horizontal strip), and
the j-th symbol of a row, matched up by descending target column, must land
in a strictly later row than the j-th symbol of the previous row.
"""

from __future__ import annotations

from functools import lru_cache

from .partitions import Partition, partitions_of


def lr_coeff(lam: Partition, mu: Partition, nu: Partition) -> int:
    """Multiplicity c^nu_{lam,mu}; zero unless |lam|+|mu| = |nu| and
    lam fits inside nu."""
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    return _lr(lam.parts, mu.parts, nu.parts)


def lr_coeff3(lam: Partition, mu: Partition, eta: Partition, nu: Partition) -> int:
    """Three-factor coefficient: sum over xi of c^xi_{lam,mu} c^nu_{xi,eta}."""
    lam, mu, eta, nu = (Partition(p) for p in (lam, mu, eta, nu))
    return _lr3(lam.parts, mu.parts, eta.parts, nu.parts)


@lru_cache(maxsize=None)
def _lr3(lam: tuple, mu: tuple, eta: tuple, nu: tuple) -> int:
    if sum(lam) + sum(mu) + sum(eta) != sum(nu):
        return 0
    total = 0
    for xi in partitions_of(sum(lam) + sum(mu)):
        c1 = _lr(lam, mu, xi.parts)
        if c1:
            total += c1 * _lr(xi.parts, eta, nu)
    return total


@lru_cache(maxsize=None)
def _lr(lam: tuple, mu: tuple, nu: tuple) -> int:
    if sum(lam) + sum(mu) != sum(nu):
        return 0
    if any(_row(nu, i) < p for i, p in enumerate(lam, 1)):
        return 0
    if not mu:
        return 1
    memo: dict = {}
    return _place_rows(0, (), lam, mu, nu, memo)


def _row(parts: tuple, i: int) -> int:
    return parts[i - 1] if i <= len(parts) else 0


def _place_rows(i, prev_rows, shape, mu, nu, memo) -> int:
    # prev_rows[j] = target row of the j-th symbol (by descending column) of
    # the previous source row; the next row's j-th symbol must go strictly
    # lower.
    if i == len(mu):
        return 1 if shape == nu else 0
    key = (i, prev_rows, shape)
    hit = memo.get(key)
    if hit is not None:
        return hit
    total = 0
    for tau, rows in _strips(shape, mu[i], nu):
        if prev_rows and any(rows[j] <= prev_rows[j] for j in range(len(rows))):
            continue
        total += _place_rows(i + 1, rows, tau, mu, nu, memo)
    memo[key] = total
    return total


def _strips(shape: tuple, k: int, nu: tuple):
    """Horizontal k-strips on top of shape staying inside nu.

    Yields (new_shape, rows) where rows lists the target row of each added
    box in descending column order.
    """
    out = []

    def extend(r, remaining, acc, acc_rows):
        # r runs over target rows; boxes in row r occupy columns
        # (shape_r, tau_r], all strictly above row r+1's columns.
        if remaining == 0:
            tail = shape[r - 1:]
            out.append((tuple(acc) + tail, tuple(acc_rows)))
            return
        if r > len(nu):
            return
        lo = _row(shape, r)
        hi = _row(nu, r)
        if r > 1:
            hi = min(hi, _row(shape, r - 1))
        for v in range(lo, min(hi, lo + remaining) + 1):
            extend(r + 1, remaining - (v - lo), acc + [v], acc_rows + [r] * (v - lo))

    extend(1, k, [], [])
    for tau, rows in out:
        yield Partition(tau).parts, rows

"""Minimum-distance ground truth: exhaustive enumeration, witness words and certificates."""

from __future__ import annotations

import dataclasses
from typing import Literal

import galois
import numpy as np
from loguru import logger

from ab_core.apparent import is_column_constant_set
from ab_core.codes import AbelianCode, is_codeword
from ab_core.context import get_enumeration_cap
from ab_core.errors import BudgetExceeded, LengthMismatch, NotACodeword, ParameterError, ZeroCode
from ab_core.field import codes_of, root_of_unity
from ab_core.fourier import BivariatePolynomial, splitting_data

Strategy = Literal["exhaustive", "witness+sdstar", "both"]
STRATEGIES: tuple[str, ...] = ("exhaustive", "witness+sdstar", "both")

_BLOCK = 1 << 16
_MATRIX_WITNESS_LENGTH = 512


def _exhaustive_search(C: AbelianCode, cap: int | None, stop_at: int | None) -> tuple[int, np.ndarray]:
    if C.dimension == 0:
        raise ZeroCode("the zero code has no minimum distance")
    q, k = C.field.order, C.dimension
    count = q**k
    cap = get_enumeration_cap(cap)
    if count > cap:
        raise BudgetExceeded(f"{q}^{k} = {count} messages exceed the cap {cap}", size=count, cap=cap)

    G = C.generator_matrix
    places = q ** np.arange(k - 1, -1, -1, dtype=np.int64)
    best, best_word = C.length + 1, None
    logger.debug(f"Enumerating {count - 1} nonzero messages of a [{C.length},{k}] code in blocks of {_BLOCK}")
    for start in range(1, count, _BLOCK):
        index = np.arange(start, min(start + _BLOCK, count), dtype=np.int64)
        messages = (index[:, None] // places) % q
        words = codes_of(C.field(messages) @ G)
        weights = np.count_nonzero(words, axis=1)
        row = int(np.argmin(weights))
        if weights[row] < best:
            best, best_word = int(weights[row]), words[row]
        if stop_at is not None and best <= stop_at:
            logger.debug(f"Stopped at weight {best} (lower bound {stop_at} attained)")
            break
    return best, best_word


def minimum_distance_exhaustive(C: AbelianCode, cap: int | None = None, stop_at: int | None = None) -> int:
    """Least weight over all nonzero codewords, by message-space enumeration.

    ``stop_at`` is a known lower bound; enumeration ends as soon as it is met.

    Raises:
        ZeroCode: dim(C) = 0
        BudgetExceeded: q^dim(C) exceeds the enumeration cap
    """
    return _exhaustive_search(C, cap, stop_at)[0]


def _columns(C: AbelianCode) -> list[int]:
    D = C.canonical_defining_set
    if not is_column_constant_set(D, axis=2):
        raise ParameterError("the defining set is not a union of full columns")
    return sorted({b for _, b in D.members})


def generator_polynomial(C: AbelianCode) -> BivariatePolynomial:
    """prod_{j in D_2} (Y - beta^j) on row 0, for a defining set Z_r1 x D_2.

    For a cyclic code this is its generator polynomial; for a multiplied code it
    is the lift of the seed's generator polynomial.
    """
    if C.is_zero():
        raise ZeroCode("the zero code has no generator polynomial")
    columns = _columns(C)
    L, embedding = splitting_data(C.field, C.r)
    beta = root_of_unity(L, C.r[1])
    coeffs = C.field.zeros(C.r)
    if columns:
        g = galois.Poly.Roots(beta ** np.array(columns, dtype=np.int64), field=L.gf)
        ascending = g.coeffs[::-1]
        coeffs[0, : len(ascending)] = embedding.preimage(ascending)
    else:
        coeffs[0, 0] = 1
    return BivariatePolynomial(C.field, C.r, coeffs)


def embedded_witness(C: AbelianCode, C_n: AbelianCode, w: BivariatePolynomial) -> BivariatePolynomial:
    """Lift a codeword w(Y) of C to C_n by placing its coefficients on row 0.

    Raises:
        NotACodeword: w is not in C, or the lift fails to vanish on D(C_n)
    """
    if w.r != C.r:
        raise LengthMismatch(f"word over {w.r}, code over {C.r}")
    if not is_codeword(C, w):
        raise NotACodeword("the word does not vanish on the defining set of C")
    coeffs = C_n.field.zeros(C_n.r)
    coeffs[0, :] = w.coeffs[0, :]
    lift = BivariatePolynomial(C_n.field, C_n.r, coeffs)
    if not is_codeword(C_n, lift):
        raise NotACodeword("the lifted word does not vanish on the defining set of C_n")
    return lift


def _witness_candidates(C: AbelianCode) -> list[tuple[str, BivariatePolynomial]]:
    candidates = []
    if is_column_constant_set(C.canonical_defining_set, axis=2):
        candidates.append(("generator polynomial", generator_polynomial(C)))
    candidates.append(("idempotent", C.idempotent))
    if C.length <= _MATRIX_WITNESS_LENGTH:
        for i, row in enumerate(C.generator_matrix):
            candidates.append((f"generator row {i}", BivariatePolynomial(C.field, C.r, row.reshape(C.r))))
    return candidates


def lightest_witness(C: AbelianCode) -> tuple[str, BivariatePolynomial] | None:
    """The lightest nonzero verified codeword among the structural candidates."""
    best = None
    for source, word in _witness_candidates(C):
        if word.is_zero() or not is_codeword(C, word):
            continue
        if best is None or word.weight < best[1].weight:
            best = (source, word)
    return best


@dataclasses.dataclass(frozen=True)
class DistanceCertificate:
    """lower_bound <= d(C) <= upper_bound, with the sources and a witness for the upper bound."""

    code: str
    lower_bound: int
    lower_source: str
    upper_bound: int | None
    upper_source: str | None
    witness: BivariatePolynomial | None = dataclasses.field(compare=False)
    transcript: tuple[str, ...] = ()

    @property
    def exact(self) -> bool:
        return self.upper_bound is not None and self.lower_bound == self.upper_bound

    @property
    def verdict(self) -> str:
        if self.exact:
            return f"exact d={self.lower_bound}"
        if self.upper_bound is None:
            return f"inconclusive d>={self.lower_bound}"
        return f"interval {self.lower_bound}<=d<={self.upper_bound}"

    def verify(self, C: AbelianCode) -> None:
        """Re-check the witness and the bound order; raises NotACodeword or ValueError."""
        if self.upper_bound is not None and self.lower_bound > self.upper_bound:
            raise ValueError(f"lower bound {self.lower_bound} exceeds upper bound {self.upper_bound}")
        if self.witness is not None:
            if not is_codeword(C, self.witness):
                raise NotACodeword("certificate witness is not a codeword")
            if self.witness.weight != self.upper_bound:
                raise ValueError(f"witness weight {self.witness.weight} != upper bound {self.upper_bound}")

    def render(self) -> str:
        lines = [
            f"code\t{self.code}",
            f"lower\t{self.lower_bound}\t{self.lower_source}",
            f"upper\t{'-' if self.upper_bound is None else self.upper_bound}\t{self.upper_source or '-'}",
            f"verdict\t{self.verdict}",
        ]
        if self.witness is not None:
            support = " ".join(f"({a},{b}):{int(self.witness.coeffs[a, b])}" for a, b in self.witness.support())
            lines.append(f"witness\t{support}")
        lines += [f"check\t{step}" for step in self.transcript]
        return "\n".join(lines)


def certify_distance(C: AbelianCode, strategy: Strategy = "both", cap: int | None = None) -> DistanceCertificate:
    """Bound d(C) by sd*(C) and a witness word, by exhaustive enumeration, or both.

    An inconclusive or interval certificate is a valid result.

    Raises:
        BudgetExceeded: the chosen strategy does not fit its cap
        ZeroCode: C is the zero code
    """
    if strategy not in STRATEGIES:
        raise ParameterError(f"unknown strategy '{strategy}', expected one of {', '.join(STRATEGIES)}")
    if C.is_zero():
        raise ZeroCode("the zero code has no minimum distance")
    transcript = []
    lower, lower_source = 1, "trivial"
    upper, upper_source, witness = None, None, None

    if strategy in ("witness+sdstar", "both"):
        sd = C.sd_star
        lower, lower_source = sd.value, "sd*"
        transcript.append(f"sd*={sd.value} over {len(sd.optimized_multipliers)} optimized multipliers")
        found = lightest_witness(C)
        if found is not None:
            upper_source, witness = found[0], found[1]
            upper = witness.weight
            transcript.append(f"witness from {upper_source} has weight {upper} and vanishes on D")
        else:
            transcript.append("no structural witness found")

    if strategy in ("exhaustive", "both"):
        stop_at = lower if lower_source == "sd*" else None
        d, word = _exhaustive_search(C, cap, stop_at)
        transcript.append(f"exhaustive minimum weight {d}")
        if lower_source == "sd*" and d < lower:
            raise RuntimeError(f"exhaustive distance {d} is below sd* {lower}")
        if upper is not None and upper != d:
            transcript.append(f"witness weight {upper} exceeds the exhaustive distance")
        lower, lower_source = d, "exhaustive"
        upper, upper_source = d, "exhaustive"
        witness = BivariatePolynomial(C.field, C.r, C.field(word.reshape(C.r)))

    certificate = DistanceCertificate(
        code=C.describe(),
        lower_bound=lower,
        lower_source=lower_source,
        upper_bound=upper,
        upper_source=upper_source,
        witness=witness,
        transcript=tuple(transcript),
    )
    certificate.verify(C)
    logger.info(f"Certified {C.describe()}: {certificate.verdict}")
    return certificate

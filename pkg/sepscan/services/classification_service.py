import logging
from itertools import combinations
from typing import Any, Iterable, Optional, Sequence

import numpy as np

from sepscan.configs.settings import settings
from sepscan.models.classification import (PART_CLASSES, FactorBlock,
                                           FactorizationTree, MinorCondition,
                                           PairwiseConditionReport,
                                           PartConditions, SeparabilityClass,
                                           SupportClass, Table3, TableBranch)
from sepscan.models.state import PureState, Subsystem
from sepscan.models.verdict import CriterionVerdict
from sepscan.quantum.minors import (LETTERS, PART_MINORS_3Q, condition_name,
                                    evaluate_condition, minor_value,
                                    support_minor_names)
from sepscan.quantum.statecore import canonical_phase
from sepscan.services.separability_service import SeparabilityService

logger = logging.getLogger(__name__)

ALL_SUPPORTS_3Q: list[tuple[int, ...]] = [
    support
    for size in range(1, 9)
    for support in combinations(range(8), size)
]


def support_letters(support: Iterable[int]) -> str:
    return ",".join(LETTERS[index] for index in support)


def parse_support(letters: str) -> tuple[int, ...]:
    """``"a,d"`` to (0, 3)."""
    try:
        return tuple(sorted(LETTERS.index(letter.strip()) for letter in letters.split(",")))
    except ValueError:
        raise ValueError(f"support must list letters a..h, got {letters!r}")


def _bits(index: int) -> tuple[int, int, int]:
    return (index >> 2) & 1, (index >> 1) & 1, index & 1


def _cut_position(index: int, part: int) -> tuple[int, int]:
    """(row, column) of a coefficient in the part | rest matrix."""
    bits = _bits(index)
    rest = [bit for k, bit in enumerate(bits, start=1) if k != part]
    return bits[part - 1], 2 * rest[0] + rest[1]


def _cut_structure(support: Sequence[int], part: int) -> Optional[list[str]]:
    """Conditions for the part to separate on this support.

    ``None`` when the support is not a rectangle across the cut (the part can
    never separate), an empty list when it always separates.
    """
    grid = {_cut_position(index, part): LETTERS[index] for index in support}
    rows = sorted({row for row, _ in grid})
    cols = sorted({col for _, col in grid})
    if len(grid) != len(rows) * len(cols):
        return None
    return support_minor_names(rows, cols, grid)


def _dedupe(branches: list[TableBranch]) -> list[TableBranch]:
    seen: list[tuple[SeparabilityClass, tuple[str, ...]]] = []
    unique = []
    for branch in branches:
        key = (branch.class_label, tuple(branch.conditions))
        if key not in seen:
            seen.append(key)
            unique.append(branch)
    return unique


def derive_support_row(support: Sequence[int]) -> SupportClass:
    """Table row of a three-qubit support, read off its per-cut structure."""
    unconditional: list[int] = []
    conditional: dict[int, list[str]] = {}
    for part in (1, 2, 3):
        conditions = _cut_structure(support, part)
        if conditions is None:
            continue
        if conditions:
            conditional[part] = conditions
        else:
            unconditional.append(part)

    if len(unconditional) >= 2:
        generic = SeparabilityClass.FULLY_SEPARABLE
    elif unconditional:
        generic = PART_CLASSES[unconditional[0]]
    else:
        generic = SeparabilityClass.FULLY_ENTANGLED

    branches: list[TableBranch] = []
    if len(unconditional) == 1:
        branches = [
            TableBranch(conditions=conds, class_label=SeparabilityClass.FULLY_SEPARABLE)
            for conds in conditional.values()
        ]
    elif not unconditional:
        branches = [
            TableBranch(conditions=conds, class_label=PART_CLASSES[part])
            for part, conds in conditional.items()
        ]
        if len(conditional) >= 2:
            union = sorted({c for conds in conditional.values() for c in conds})
            branches.append(
                TableBranch(conditions=union, class_label=SeparabilityClass.FULLY_SEPARABLE)
            )
    branches = _dedupe(branches)

    return SupportClass(
        support=tuple(support),
        letters=support_letters(support),
        class_label=SeparabilityClass.CONDITIONAL if branches else generic,
        generic_label=generic,
        branches=branches,
    )


class ClassificationService:
    """Service class for factorization and three-qubit classification."""

    def __init__(
        self,
        tolerance: Optional[float] = None,
        cutoff: Optional[float] = None,
        separability: Optional[SeparabilityService] = None,
    ):
        """Initialize ClassificationService on top of a SeparabilityService."""
        self.separability = separability or SeparabilityService(tolerance, cutoff)

    @property
    def tolerance(self) -> float:
        return self.separability.tolerance

    def finest_factorization(self, state: PureState) -> FactorizationTree:
        """Split into internally entangled blocks.

        Candidate blocks go by ascending size up to ⌊k/2⌋, then lexicographic
        labels. The first separable one is factored through the oracle and
        both factors are split again.
        """
        if state.n > settings.max_qubits:
            raise ValueError(
                f"factorization is limited to {settings.max_qubits} qubits, got {state.n}"
            )
        diagnostics: list[CriterionVerdict] = []
        disagreements: list[str] = []
        blocks = self._split(state, diagnostics, disagreements)
        blocks.sort(key=lambda block: block.labels[0])
        return FactorizationTree(
            labels=tuple(sorted(state.labels)),
            blocks=blocks,
            diagnostics=diagnostics,
            disagreements=disagreements,
        )

    def _split(
        self,
        state: PureState,
        diagnostics: list[CriterionVerdict],
        disagreements: list[str],
    ) -> list[FactorBlock]:
        labels = sorted(state.labels)
        if state.n == 1:
            return [FactorBlock(labels=tuple(labels), entangled=False, state=canonical_phase(state))]

        for size in range(1, state.n // 2 + 1):
            for combo in combinations(labels, size):
                block = Subsystem(labels=combo)
                verdict = self.separability.block_separable(state, block)
                diagnostics.append(verdict)
                if not verdict.separable:
                    continue
                oracle = self.separability.schmidt_oracle(state, block)
                if not oracle.separable:
                    logger.warning(
                        "criterion separates %s but the oracle does not; not splitting",
                        block.describe(),
                    )
                    disagreements.append(block.describe())
                    continue
                return self._split(
                    oracle.block_factor, diagnostics, disagreements
                ) + self._split(oracle.complement_factor, diagnostics, disagreements)

        return [FactorBlock(labels=tuple(labels), entangled=True, state=canonical_phase(state))]

    @staticmethod
    def class_of_tree(tree: FactorizationTree) -> SeparabilityClass:
        """Table class of a three-qubit factorization."""
        if tree.n != 3:
            raise ValueError(f"table classes are defined for 3 qubits, got {tree.n}")
        if len(tree.blocks) == 3:
            return SeparabilityClass.FULLY_SEPARABLE
        if len(tree.blocks) == 1:
            return SeparabilityClass.FULLY_ENTANGLED
        single = next(block for block in tree.blocks if len(block.labels) == 1)
        return PART_CLASSES[single.labels[0]]

    def classify_support_3q(
        self, support: Iterable[int], coefficients: Optional[Any] = None
    ) -> SupportClass:
        """Table verdict for a support, resolved by the coefficients when given."""
        support = tuple(sorted(set(support)))
        if not support or support[0] < 0 or support[-1] > 7:
            raise ValueError(f"support must be a nonempty subset of 0..7, got {support}")
        row = derive_support_row(support)
        if coefficients is None:
            if row.branches:
                raise ValueError(
                    f"support ({row.letters}) is conditional; coefficients are required"
                )
            return row

        amplitudes = np.asarray(coefficients, dtype=np.complex128).reshape(-1)
        if amplitudes.size != 8:
            raise ValueError(f"expected 8 coefficients, got {amplitudes.size}")
        norm = np.linalg.norm(amplitudes)
        if norm == 0.0:
            raise ValueError("all-zero coefficients")
        amplitudes = amplitudes / norm
        nonzero = tuple(int(i) for i in np.flatnonzero(np.abs(amplitudes) > self.tolerance))
        if nonzero != support:
            raise ValueError(
                f"coefficients are nonzero on ({support_letters(nonzero)}), "
                f"not on ({row.letters})"
            )

        separable_parts = [
            part
            for part, pairs in PART_MINORS_3Q.items()
            if all(evaluate_condition(amplitudes, pair, self.tolerance) for pair in pairs)
        ]
        if len(separable_parts) >= 2:
            label = SeparabilityClass.FULLY_SEPARABLE
        elif separable_parts:
            label = PART_CLASSES[separable_parts[0]]
        else:
            label = SeparabilityClass.FULLY_ENTANGLED
        satisfied = sorted(
            {
                condition
                for branch in row.branches
                for condition in branch.conditions
                if evaluate_condition(amplitudes, condition, self.tolerance)
            }
        )
        return row.model_copy(update={"class_label": label, "satisfied": satisfied})

    def verify_pairwise_conditions_3q(self, state: PureState) -> PairwiseConditionReport:
        """Six minor equalities per part next to that part's ξ²."""
        if state.n != 3:
            raise ValueError(f"pairwise conditions are defined for 3 qubits, got {state.n}")
        parts = []
        for part, pairs in PART_MINORS_3Q.items():
            conditions = []
            for pair in pairs:
                value = abs(minor_value(state.amplitudes, pair))
                conditions.append(
                    MinorCondition(
                        name=condition_name(*pair), value=value, holds=value < self.tolerance
                    )
                )
            verdict = self.separability.one_part_separable(state, state.labels[part - 1])
            all_hold = all(condition.holds for condition in conditions)
            parts.append(
                PartConditions(
                    part=part,
                    conditions=conditions,
                    all_hold=all_hold,
                    norm_sq=verdict.norm_sq,
                    criterion_separable=verdict.separable,
                    consistent=all_hold == verdict.separable,
                )
            )
        return PairwiseConditionReport(parts=parts)

    def generate_table_3q(self, draws: Optional[int] = None, seed: int = 0) -> Table3:
        """All 255 supports, each checked against sampled coefficients.

        Generic draws must land on the row's generic class; constrained draws
        built to satisfy a branch must land on that branch's class.
        """
        draws = settings.table_draws if draws is None else draws
        if draws < 0:
            raise ValueError(f"draws must be nonnegative, got {draws}")
        logger.info("generating the three-qubit table with %d draws per case", draws)

        sampler = self.table_sampler()
        rows: list[SupportClass] = []
        failures: list[str] = []
        for index, support in enumerate(ALL_SUPPORTS_3Q):
            row = derive_support_row(support)
            rng = np.random.default_rng([seed, index])
            for _ in range(draws):
                observed = sampler._sampled_class(self._generic_draw(support, rng))
                if observed != row.generic_label:
                    failures.append(
                        f"({row.letters}) generic draw gave {observed.value}, "
                        f"expected {row.generic_label.value}"
                    )
            for branch in row.branches:
                for _ in range(draws):
                    coefficients = self._branch_draw(support, branch, rng)
                    if coefficients is None:
                        failures.append(
                            f"({row.letters}) cannot build a draw for {branch.class_label.value}"
                        )
                        break
                    observed = sampler._sampled_class(coefficients)
                    if observed != branch.class_label:
                        failures.append(
                            f"({row.letters}) draw with {','.join(branch.conditions)} "
                            f"gave {observed.value}, expected {branch.class_label.value}"
                        )
            rows.append(row)

        for failure in failures:
            logger.warning("table sampling: %s", failure)
        return Table3(rows=rows, draws=draws, seed=seed, sampling_failures=failures)

    def table_sampler(self) -> "ClassificationService":
        """Same thresholds, without the component-sum cross-check on every block."""
        return ClassificationService(
            separability=SeparabilityService(
                self.tolerance,
                self.separability.oracle.cutoff,
                verify_components=False,
            )
        )

    def _sampled_class(self, coefficients: np.ndarray) -> SeparabilityClass:
        tree = self.finest_factorization(PureState.from_unnormalized(coefficients))
        return self.class_of_tree(tree)

    @staticmethod
    def _nonzero(rng: np.random.Generator, size: int) -> np.ndarray:
        """Complex values with modulus in [0.5, 1.5) and uniform phase."""
        modulus = rng.uniform(0.5, 1.5, size)
        return modulus * np.exp(2j * np.pi * rng.random(size))

    def _generic_draw(self, support: Sequence[int], rng: np.random.Generator) -> np.ndarray:
        coefficients = np.zeros(8, dtype=np.complex128)
        coefficients[list(support)] = self._nonzero(rng, len(support))
        return coefficients

    def _branch_draw(
        self, support: Sequence[int], branch: TableBranch, rng: np.random.Generator
    ) -> Optional[np.ndarray]:
        """Coefficients on the support satisfying the branch's equalities exactly."""
        coefficients = np.zeros(8, dtype=np.complex128)
        if branch.class_label == SeparabilityClass.FULLY_SEPARABLE:
            projections = [sorted({_bits(i)[q] for i in support}) for q in range(3)]
            if np.prod([len(p) for p in projections]) != len(support):
                return None
            factors = [dict(zip(p, self._nonzero(rng, len(p)))) for p in projections]
            for index in support:
                bits = _bits(index)
                coefficients[index] = np.prod([factors[q][bits[q]] for q in range(3)])
            return coefficients

        part = next(k for k, label in PART_CLASSES.items() if label == branch.class_label)
        positions = {index: _cut_position(index, part) for index in support}
        rows = sorted({row for row, _ in positions.values()})
        cols = sorted({col for _, col in positions.values()})
        u = dict(zip(rows, self._nonzero(rng, len(rows))))
        v = dict(zip(cols, self._nonzero(rng, len(cols))))
        for index, (row, col) in positions.items():
            coefficients[index] = u[row] * v[col]
        return coefficients

    @staticmethod
    def compare_with_golden(table: Table3, golden: dict) -> list[str]:
        """Differences between a generated table and the bundled golden table."""
        by_support = {row.support: row for row in table.rows}
        mismatches: list[str] = []
        if len(table.rows) != len(ALL_SUPPORTS_3Q):
            mismatches.append(f"table has {len(table.rows)} rows, expected 255")

        listed: dict[int, set[tuple[int, ...]]] = {}
        for group in golden["groups"]:
            if isinstance(group["members"], list):
                members = {parse_support(m["support"]) for m in group["members"]}
                listed.setdefault(group["number"], set()).update(members)

        for group in golden["groups"]:
            number, generic = group["number"], SeparabilityClass(group["generic"])
            same_size = [s for s in by_support if len(s) == number]
            members = group["members"]
            if members == "all":
                supports = same_size
                expected = {s: [] for s in supports}
            elif members == "others":
                supports = [s for s in same_size if s not in listed.get(number, set())]
                expected = {s: [] for s in supports}
            else:
                expected = {
                    parse_support(m["support"]): m.get("branches", []) for m in members
                }
                supports = list(expected)

            if len(supports) != group["count"]:
                mismatches.append(
                    f"group {number}/{generic.value}: {len(supports)} supports, "
                    f"expected {group['count']}"
                )
            for support in supports:
                row = by_support.get(support)
                if row is None:
                    mismatches.append(f"({support_letters(support)}) is missing")
                    continue
                if row.generic_label != generic:
                    mismatches.append(
                        f"({row.letters}) is {row.generic_label.value}, expected {generic.value}"
                    )
                golden_branches = expected[support]
                if len(golden_branches) != len(row.branches):
                    mismatches.append(
                        f"({row.letters}) has {len(row.branches)} branches, "
                        f"expected {len(golden_branches)}"
                    )
                for branch in golden_branches:
                    label = SeparabilityClass(branch["class"])
                    wanted = set(branch["conditions"])
                    if not any(
                        b.class_label == label and wanted <= set(b.conditions)
                        for b in row.branches
                    ):
                        mismatches.append(
                            f"({row.letters}) lacks branch {label.value} if "
                            f"{','.join(sorted(wanted))}"
                        )

        for mismatch in mismatches:
            logger.warning("golden table mismatch: %s", mismatch)
        return mismatches

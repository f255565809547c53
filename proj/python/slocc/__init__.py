"""SLOCC equivalence-class criteria for 3- and 4-qubit pure states."""

try:
    from ._slocc import (
        class_names,
        classify3,
        classify3_exact,
        classify4,
        classify4_exact,
        discriminant_forms,
        ghz_discriminant,
        random_orbit,
        rank_classify3,
        run_suite,
        suite_names,
    )
except ImportError:  # running against a bare build tree
    from _slocc import (
        class_names,
        classify3,
        classify3_exact,
        classify4,
        classify4_exact,
        discriminant_forms,
        ghz_discriminant,
        random_orbit,
        rank_classify3,
        run_suite,
        suite_names,
    )

__all__ = [
    "class_names",
    "classify3",
    "classify3_exact",
    "classify4",
    "classify4_exact",
    "discriminant_forms",
    "ghz_discriminant",
    "random_orbit",
    "rank_classify3",
    "run_suite",
    "suite_names",
]

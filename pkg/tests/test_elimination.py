from fractions import Fraction

from hypothesis import given, strategies as st

from tilewalks.elimination import (
    PRINTED_M,
    RatMatrix,
    build_matrix_m,
    build_shift_vectors,
    charpoly_factorization_check,
    kernel,
    shift_vector,
    verify_la_lb_combination,
    R_A,
    R_B,
)
from tilewalks.polynomials import IntPoly, charpoly_of_recurrence
from tilewalks.recurrences import eval_system, walk_system

KERNEL_VECTOR = (1, -5, 7, -3, -4, 2, 1, -3, 5, -2, -1)


def test_shift_vectors_as_printed():
    ra, rb = build_shift_vectors()
    assert len(ra) == 6 and len(rb) == 5
    assert ra[0] == R_A
    assert ra[5] == (0, 0, 0, 0, 0, 1, -1, 0, 5, 0, -4, -1)
    assert rb[4] == (0, 0, 0, 0, 1, -3, -2, 6, -3, -9, 0, 2)
    assert sum(R_A) == 0


def test_matrix_matches_printed():
    m = build_matrix_m()
    assert m.rows == 12 and m.cols == 11
    assert tuple(tuple(int(x) for x in row) for row in m.entries) == PRINTED_M
    assert m.entries[0][0] == 1 and m.entries[0][6] == -1
    assert m.entries[11][10] == -2
    assert m.column(2) == tuple(Fraction(x) for x in shift_vector(R_A, 2))


def test_kernel_of_m():
    basis = kernel(build_matrix_m())
    assert basis == [KERNEL_VECTOR]
    assert all(x == 0 for x in build_matrix_m().mul_vector(basis[0]))


def test_kernel_trivial_cases():
    identity = RatMatrix.from_rows([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    assert kernel(identity) == []
    zero = RatMatrix.from_rows([[0, 0], [0, 0]])
    assert kernel(zero) == [(1, 0), (0, 1)]


def test_kernel_is_deterministic():
    assert kernel(build_matrix_m()) == kernel(build_matrix_m())


def test_la_lb_combination():
    for check in verify_la_lb_combination(20):
        assert check.passed, f"{check.name}: {check.detail}"


def test_la_lb_perturbed_table_fails():
    tables = dict(eval_system(walk_system(), 31))
    bad = list(tables["r2"].values)
    bad[15] += 1
    tables["r2"] = type(tables["r2"])("r2", tuple(bad))
    results = verify_la_lb_combination(30, tables=tables)
    failed = [c for c in results if not c.passed]
    assert failed
    assert all(c.first_failure is not None for c in failed)


def test_charpoly_factorizations():
    for check in charpoly_factorization_check():
        assert check.passed, check.detail


def test_charpoly_expansion_degree6():
    expanded = IntPoly([-1, 1]) * IntPoly([1, 1]) * IntPoly([-1, -1, 1]) ** 2
    assert expanded == IntPoly([-1, -2, 2, 4, -2, -2, 1])


def test_charpoly_of_recurrence():
    # x(n) = x(n-1) + x(n-2)  ->  x^2 - x - 1
    assert charpoly_of_recurrence([1, 1]) == IntPoly([-1, -1, 1])


small_polys = st.lists(st.integers(-9, 9), min_size=1, max_size=6).map(IntPoly)


@given(small_polys, small_polys.filter(bool))
def test_poly_mul_div_roundtrip(p, q):
    prod = p * q
    quot, rem = prod.divmod(q)
    assert quot == p
    assert not rem

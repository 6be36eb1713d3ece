use pyo3::prelude::*;
use pyo3::types::PyDict;
use pyo3::wrap_pymodule;

fn run(code: &str) {
    Python::initialize();
    Python::attach(|py| {
        let module = wrap_pymodule!(schur_ratio_py::schur_ratio_py)(py);
        let globals = PyDict::new(py);
        globals.set_item("sr", module).unwrap();
        let code = std::ffi::CString::new(code).unwrap();
        if let Err(e) = py.run(&code, Some(&globals), None) {
            e.print(py);
            panic!("python snippet failed");
        }
    });
}

#[test]
fn exact_values_cross_as_int_and_fraction() {
    run(r#"
from fractions import Fraction
assert sr.ratio(2) == 2 and sr.ratio(3) == 14
assert sr.fam_volume(2) == 4
assert sr.v0(2) == Fraction(4, 3) and sr.v1(2) == Fraction(8, 3)
assert sr.legendre(2, Fraction(1, 2)) == Fraction(-1, 8)
assert sr.series(5)[:4] == [0, 0, 2, 14]
routes = sr.ratio_routes(10)
assert len({routes[k] for k in ("closed_form", "recurrence", "series", "sum_form", "integral")}) == 1
assert sr.ratio_routes(1)["sum_form"] is None
"#);
}

#[test]
fn records_and_polynomials() {
    run(r#"
from fractions import Fraction
r = sr.records(3)
assert [x.ratio for x in r] == [0, 0, 2, 14]
assert r[2].p0 == Fraction(1, 3)
p = sr.MonicPolynomial([0, Fraction(1, 2), 0])
assert p.degree == 3 and p.is_stable()
assert p.classify() == ("classified", 1)
assert sr.MonicPolynomial([0, 3]).classify() == ("unstable", None)
assert sr.MonicPolynomial([-1, Fraction(1, 4)]).classify() == ("degenerate", None)
"#);
}

#[test]
fn errors_map_to_python_exceptions() {
    run(r#"
for call in (lambda: sr.v1(1), lambda: sr.MonicPolynomial([]), lambda: sr.asymptotic_residual(50, 16)):
    try:
        call()
    except ValueError:
        pass
    else:
        raise AssertionError("expected ValueError")
"#);
}

#[test]
fn sampler_and_suites() {
    run(r#"
a = sr.estimate_volumes(2, 4000, seed=7, threads=1)
b = sr.estimate_volumes(2, 4000, seed=7, threads=3)
assert a == b
assert sum(a["hits"]) + a["degenerate"] + a["misses"] == 4000
assert all(fails == 0 for _, _, fails in sr.identities(max_a=10, max_m=8))
assert abs(sr.asymptotic_residual(50) + 0.0023439286209280066) < 1e-12
"#);
}

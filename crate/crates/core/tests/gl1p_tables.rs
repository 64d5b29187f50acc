use ver4::comodule::{
    composition_factors, gl1p_highest_weight, gl1p_irrep, Character, Gl1pCalculus, Gl1pLabel, DEFAULT_BOUND,
};
use ver4::fixtures::{self, parse_character};

fn label(s: &str) -> Gl1pLabel {
    s.parse().unwrap()
}

/// Highest weights of the factors of an actual composition series.
fn direct_cell(a: Gl1pLabel, b: Gl1pLabel) -> Character {
    let v = gl1p_irrep(a).unwrap().tensor(&gl1p_irrep(b).unwrap()).unwrap();
    let mut out = Character::new();
    for f in composition_factors(&v, DEFAULT_BOUND).unwrap() {
        *out.entry(gl1p_highest_weight(&f).unwrap()).or_default() += 1;
    }
    out
}

#[test]
fn character_calculus_agrees_with_composition_series() {
    let mut calc = Gl1pCalculus::new();
    let mut checked = 0;
    for cell in fixtures::table1().unwrap().cells {
        let (a, b) = (label(&cell.row), label(&cell.col));
        let dim = gl1p_irrep(a).unwrap().dim() * gl1p_irrep(b).unwrap().dim();
        if dim > 12 {
            continue;
        }
        assert_eq!(direct_cell(a, b), calc.tensor_cell(a, b).unwrap(), "{a} x {b}");
        checked += 1;
    }
    assert!(checked >= 6, "only {checked} cells small enough");
}

#[test]
fn trivial_is_a_unit() {
    let mut calc = Gl1pCalculus::new();
    let one = label("(0, 1)");
    for s in ["(1, 1)", "(0, T(2))", "(1, T(3))"] {
        let c = calc.tensor_cell(label(s), one).unwrap();
        assert_eq!(c, parse_character(s).unwrap());
    }
}

#[test]
fn printed_examples() {
    let mut calc = Gl1pCalculus::new();
    let c = calc.tensor_cell(label("(1, 1)"), label("(1, 1)")).unwrap();
    assert_eq!(c, parse_character("(2, 1) + 2 (1, T(1))").unwrap());
    let c = calc.tensor_cell(label("(1, T(3))"), label("(1, T(2))")).unwrap();
    assert_eq!(c, parse_character("(2, xi*chi*T(1)) + (2, chi*T(1))").unwrap());
}

#[test]
fn weight_lists_have_printed_dimensions() {
    let mut dims = std::collections::BTreeMap::new();
    for fx in fixtures::weight_lists().unwrap() {
        let v = gl1p_irrep(label(&fx.label)).unwrap();
        assert_eq!(v.dim(), fx.dim, "{}", fx.label);
        assert!(v.validate().passed(), "{}", fx.label);
        dims.entry(fx.item).or_insert(fx.dim);
    }
    let dims: Vec<usize> = dims.into_values().collect();
    assert_eq!(dims, [1, 3, 8, 4, 8, 4, 4, 3, 3, 3, 4, 8, 8]);
}

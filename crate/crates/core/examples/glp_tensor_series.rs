//! Composition series of tensor products of simple GL(P)-representations,
//! head first.
use ver4::comodule::{composition_series, glp_irrep, parse_glp_factors, Comodule, DEFAULT_BOUND};

fn main() -> ver4::Result<()> {
    for expr in ["xi*xi", "T(1)*T(1)", "T(1)*T(2)", "T(1)*T(3)", "T(2)*T(2)", "T(2)*T(3)", "T(3)*T(3)"] {
        let reps = parse_glp_factors(expr)?
            .into_iter()
            .map(glp_irrep)
            .collect::<ver4::Result<Vec<_>>>()?;
        let v = Comodule::tensor_all(&reps)?;
        let series: Vec<String> = composition_series(&v, DEFAULT_BOUND)?.iter().map(ToString::to_string).collect();
        println!("{expr} = [{}]", series.join(", "));
    }
    Ok(())
}

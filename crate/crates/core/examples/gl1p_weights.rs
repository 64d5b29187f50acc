//! Weight decompositions of simple GL(1+P)-representations and one tensor
//! product cell.
use ver4::comodule::{format_character, gl1p_irrep, weight_decomposition, Gl1pCalculus, Gl1pLabel};

fn main() -> ver4::Result<()> {
    for s in ["(1, 1)", "(1, T(1))", "(1, T(2))", "(1, xi*chi)"] {
        let label: Gl1pLabel = s.parse()?;
        let v = gl1p_irrep(label)?;
        let rows: Vec<String> = weight_decomposition(&v)?.iter().map(ToString::to_string).collect();
        println!("L{label}: dim {}: {}", v.dim(), rows.join(" | "));
    }
    let one: Gl1pLabel = "(1, 1)".parse()?;
    let cell = Gl1pCalculus::new().tensor_cell(one, one)?;
    println!("L(1, 1) x L(1, 1) = {}", format_character(&cell));
    Ok(())
}

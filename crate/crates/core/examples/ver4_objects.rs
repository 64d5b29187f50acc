//! Objects of Ver4+: decompositions, tensor products and symmetric powers.
use ver4::ver4::{parse_object_expr, sym_power, Ver4Object};

fn main() -> ver4::Result<()> {
    for expr in ["P⊗P", "(1+P)*(1+P)", "3+2P"] {
        let x = parse_object_expr(expr)?;
        println!("{expr} = {} (dim {})", x.label(), x.dim());
    }
    let p = Ver4Object::projective();
    for n in 0..=6 {
        println!("Sym^{n} P = {}", sym_power(&p, n).label());
    }
    Ok(())
}

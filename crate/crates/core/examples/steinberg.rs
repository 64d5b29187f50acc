//! Steinberg tensor product checks for GL(P) and GL(2P).
use ver4::comodule::{steinberg_check, GlpLabel};

fn main() -> ver4::Result<()> {
    for s in ["T(1)", "xi*T(3)"] {
        let l: GlpLabel = s.parse()?;
        println!("{}", steinberg_check(&[l], &[1])?);
    }
    let lambda = [GlpLabel::t(1)?, GlpLabel::chi_pow(0)];
    println!("{}", steinberg_check(&lambda, &[1, 0])?);
    Ok(())
}

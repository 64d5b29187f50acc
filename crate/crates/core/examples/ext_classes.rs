//! Skew-primitive classes in O(GL(P)) up to a degree cutoff.
use ver4::braided::BraidedPoly;
use ver4::comodule::{skew_primitives, xi_poly};
use ver4::group::{Group, GroupSpec};

fn main() -> ver4::Result<()> {
    let g = Group::new(GroupSpec::GLP)?;
    for (name, gamma) in [("1", BraidedPoly::one()), ("xi", xi_poly())] {
        let r = skew_primitives(&g, &gamma, 16)?;
        println!("Ext(1, {name}) up to degree 16: dim {}", r.dim());
        for c in &r.classes {
            println!("  {}", c.to_string_with(g.ring()));
        }
    }
    Ok(())
}

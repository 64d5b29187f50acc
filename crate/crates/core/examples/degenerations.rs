//! Reductions of supergroups over Q(sqrt 2) modulo sqrt 2.
use ver4::char0::{degeneration, reduce_supervector, DEGENERATION_KEYS};

fn main() -> ver4::Result<()> {
    for key in DEGENERATION_KEYS {
        let d = degeneration(key)?;
        let r = d.check()?;
        println!("{} -> {}: {}", d.presentation.name, d.target, if r.matches() { "match" } else { "differs" });
        for line in &r.reduced {
            println!("  {line}");
        }
    }
    println!("k^(3|1) reduces to {}", reduce_supervector(2, 1)?.label());
    Ok(())
}

//! Special cases of the bound and their agreement with the general formula.
use bihankel::bound::{theorem_bound, Corollary};
use bihankel::minda::PhiSpec;

pub fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cases = [
        Corollary::One {
            lambda: 2.0,
            phi: "order_beta:0.25".parse::<PhiSpec>()?,
        },
        Corollary::Two {
            alpha: 0.5,
            lambda: 3.0,
        },
        Corollary::Three {
            alpha: 0.7,
            beta: 0.3,
        },
        Corollary::Four { alpha: 1.0 },
        Corollary::Five {
            alpha: 0.2,
            lambda: 2.0,
            delta: 0.5,
        },
        Corollary::Six {
            alpha: 0.2,
            delta: 0.5,
        },
        Corollary::Seven { alpha: 0.0 },
    ];
    for c in cases {
        let (params, phi) = c.specialization()?;
        let general = theorem_bound(&params, &phi).bound;
        let closed = c.bound()?;
        let printed = c.printed_bound()?;
        let note = if printed != closed {
            format!("  (typeset form gives {printed:.6})")
        } else {
            String::new()
        };
        println!(
            "corollary {}: {closed:.12} general {general:.12}{note}",
            c.id()
        );
    }
    Ok(())
}

//! The axioms of a solid, `A1`..`A29`.

use std::cmp::Ordering;

use crate::laws::axiom22_residual;
use crate::magnitude::{MagIndex, Magnitude};
use crate::number::ExternalNumber as En;

use super::{sorted2, Outcome, Property};

fn unity(x: &En) -> En {
    x.unity().expect("zeroless operand")
}

fn inv(x: &En) -> En {
    x.inverse().expect("zeroless operand")
}

/// Sorts three elements with a fixed comparison network.
fn sorted3(a: En, b: En, c: En) -> (En, En, En) {
    let (a, b) = sorted2(a, b);
    let (b, c) = sorted2(b, c);
    let (a, b) = sorted2(a, b);
    (a, b, c)
}

pub(super) fn properties() -> Vec<Property> {
    vec![
        Property::new("A1", 3, "x+(y+z) = (x+y)+z", |g| {
            let (x, y, z) = (g.any(), g.any(), g.any());
            Outcome::check(
                &x + &(&y + &z) == &(&x + &y) + &z,
                &[("x", &x), ("y", &y), ("z", &z)],
            )
        }),
        Property::new("A2", 2, "x+y = y+x", |g| {
            let (x, y) = (g.any(), g.any());
            Outcome::check(&x + &y == &y + &x, &[("x", &x), ("y", &y)])
        }),
        Property::new(
            "A3",
            2,
            "x+e(x) = x and x+f = x implies e(x)+f = e(x)",
            |g| {
                let x = g.any();
                let e = x.neutral();
                let f = if g.coin(0.5) {
                    g.inside(x.magnitude())
                } else {
                    g.any()
                };
                Outcome::check(
                    &x + &e == x && (&x + &f != x || &e + &f == e),
                    &[("x", &x), ("f", &f)],
                )
            },
        ),
        Property::new("A4", 1, "x+(-x) = e(x) and e(-x) = e(x)", |g| {
            let x = g.any();
            let s = -&x;
            Outcome::check(
                &x + &s == x.neutral() && s.neutral() == x.neutral(),
                &[("x", &x)],
            )
        }),
        Property::new("A5", 2, "e(x+y) is e(x) or e(y)", |g| {
            let (x, y) = (g.any(), g.any());
            let e = (&x + &y).neutral();
            Outcome::check(
                e == x.neutral() || e == y.neutral(),
                &[("x", &x), ("y", &y)],
            )
        }),
        Property::new("A6", 3, "x(yz) = (xy)z", |g| {
            let (x, y, z) = (g.any(), g.any(), g.any());
            Outcome::check(
                &x * &(&y * &z) == &(&x * &y) * &z,
                &[("x", &x), ("y", &y), ("z", &z)],
            )
        }),
        Property::new("A7", 2, "xy = yx", |g| {
            let (x, y) = (g.any(), g.any());
            Outcome::check(&x * &y == &y * &x, &[("x", &x), ("y", &y)])
        }),
        Property::new(
            "A8",
            2,
            "xu(x) = x and xv = x implies u(x)v = u(x), x zeroless",
            |g| {
                let x = g.zeroless();
                let u = unity(&x);
                let v = if g.coin(0.5) {
                    &En::one() + &g.inside(u.magnitude())
                } else {
                    g.any()
                };
                Outcome::check(
                    &x * &u == x && (&x * &v != x || &u * &v == u),
                    &[("x", &x), ("v", &v)],
                )
            },
        ),
        Property::new("A9", 1, "x/x = u(x) and u(1/x) = u(x), x zeroless", |g| {
            let x = g.zeroless();
            let d = inv(&x);
            let u = unity(&x);
            Outcome::check(&x * &d == u && unity(&d) == u, &[("x", &x)])
        }),
        Property::new("A10", 2, "u(xy) is u(x) or u(y), x and y zeroless", |g| {
            let (x, y) = (g.zeroless(), g.zeroless());
            let u = unity(&(&x * &y));
            Outcome::check(u == unity(&x) || u == unity(&y), &[("x", &x), ("y", &y)])
        }),
        Property::new("A11", 1, "x <= x", |g| {
            let x = g.any();
            Outcome::check(x.compare(&x) != Ordering::Greater, &[("x", &x)])
        }),
        Property::new("A12", 2, "x <= y and y <= x implies x = y", |g| {
            let x = g.any();
            let y = if g.coin(0.5) {
                &x + &g.inside(x.magnitude())
            } else {
                g.any()
            };
            Outcome::implies(x <= y && y <= x, || x == y, &[("x", &x), ("y", &y)])
        }),
        Property::new("A13", 3, "x <= y and y <= z implies x <= z", |g| {
            let (x, y, z) = sorted3(g.any(), g.any(), g.any());
            Outcome::implies(
                x <= y && y <= z,
                || x <= z,
                &[("x", &x), ("y", &y), ("z", &z)],
            )
        }),
        Property::new("A14", 2, "x <= y or y <= x", |g| {
            let (x, y) = (g.any(), g.any());
            Outcome::check(x <= y || y <= x, &[("x", &x), ("y", &y)])
        }),
        Property::new("A15", 3, "x <= y implies x+z <= y+z", |g| {
            let (x, y) = sorted2(g.any(), g.any());
            let z = g.any();
            Outcome::implies(
                x <= y,
                || &x + &z <= &y + &z,
                &[("x", &x), ("y", &y), ("z", &z)],
            )
        }),
        Property::new(
            "A16",
            2,
            "y+e(x) = e(x) implies y <= e(x) and -y <= e(x)",
            |g| {
                let x = g.any();
                let y = if g.coin(0.6) {
                    g.inside(x.magnitude())
                } else {
                    g.any()
                };
                let e = x.neutral();
                Outcome::implies(&y + &e == e, || y <= e && -&y <= e, &[("x", &x), ("y", &y)])
            },
        ),
        Property::new("A17", 3, "e(x) < x and y <= z implies xy <= xz", |g| {
            let x = if g.coin(0.7) {
                g.positive_zeroless()
            } else {
                g.any()
            };
            let (y, z) = sorted2(g.any(), g.any());
            Outcome::implies(
                x.neutral() < x && y <= z,
                || &x * &y <= &x * &z,
                &[("x", &x), ("y", &y), ("z", &z)],
            )
        }),
        Property::new("A18", 3, "e(y) <= y <= z implies e(x)y <= e(x)z", |g| {
            let x = g.any();
            let y = g.positive();
            let z = if g.coin(0.7) {
                &y + &g.positive()
            } else {
                g.any()
            };
            let e = x.neutral();
            Outcome::implies(
                y.neutral() <= y && y <= z,
                || &e * &y <= &e * &z,
                &[("x", &x), ("y", &y), ("z", &z)],
            )
        }),
        Property::new("A19", 2, "e(x)y is a magnitude", |g| {
            let (x, y) = (g.any(), g.any());
            let w = &x.neutral() * &y;
            Outcome::check(w.neutral() == w, &[("x", &x), ("y", &y)])
        }),
        Property::new("A20", 2, "e(xy) = e(x)y + e(y)x", |g| {
            let (x, y) = (g.any(), g.any());
            Outcome::check(
                (&x * &y).neutral() == &(&x.neutral() * &y) + &(&y.neutral() * &x),
                &[("x", &x), ("y", &y)],
            )
        }),
        Property::new("A21", 1, "e(u(x)) = e(x)/x, x zeroless", |g| {
            let x = g.zeroless();
            Outcome::check(unity(&x).neutral() == &x.neutral() * &inv(&x), &[("x", &x)])
        }),
        Property::new("A22", 3, "xy+xz = x(y+z) + e(x)y + e(x)z", |g| {
            let (x, y, z) = g.triple();
            Outcome::check(
                axiom22_residual(&x, &y, &z).is_ok(),
                &[("x", &x), ("y", &y), ("z", &z)],
            )
        }),
        Property::new("A23", 2, "-(xy) = (-x)y", |g| {
            let (x, y) = (g.any(), g.any());
            Outcome::check(-&(&x * &y) == &(-&x) * &y, &[("x", &x), ("y", &y)])
        }),
        Property::new("A24", 1, "0+x = x", |g| {
            let x = g.any();
            Outcome::check(&En::zero() + &x == x, &[("x", &x)])
        }),
        Property::new("A25", 1, "1x = x", |g| {
            let x = g.any();
            Outcome::check(&En::one() * &x == x, &[("x", &x)])
        }),
        Property::new("A26", 1, "e(x) + Mmax = Mmax", |g| {
            let x = g.any();
            let m = En::max_magnitude();
            Outcome::check(&x.neutral() + &m == m, &[("x", &x)])
        }),
        Property::new(
            "A27",
            1,
            "e(w) is neither 0 nor Mmax for the witness w",
            |g| {
                let w = g.with_finite_magnitude();
                let e = w.neutral();
                Outcome::check(e != En::zero() && e != En::max_magnitude(), &[("w", &w)])
            },
        ),
        Property::new("A28", 1, "x = a + e(x) with e(a) = 0", |g| {
            let x = g.any();
            let (a, m) = x.decompose();
            Outcome::check(
                &a + &En::from(m) == x && a.neutral() == En::zero() && En::from(m) == x.neutral(),
                &[("x", &x)],
            )
        }),
        Property::new(
            "A29",
            2,
            "magnitudes x < y are separated by a zeroless z",
            |g| {
                let (x, y) = sorted2(g.magnitude(), g.magnitude());
                Outcome::implies(
                    x < y,
                    || {
                        let z = density_witness(x.magnitude(), y.magnitude());
                        z.is_zeroless() && x < z && z < y
                    },
                    &[("x", &x), ("y", &y)],
                )
            },
        ),
    ]
}

/// Zeroless element strictly between the magnitudes `lower < upper`:
/// `eps^k + M_j` for `M_j < M_k`.
pub(crate) fn density_witness(lower: Magnitude, upper: Magnitude) -> En {
    let p = match (upper.index(), lower.index()) {
        (MagIndex::Finite(k), _) => k,
        (_, MagIndex::Finite(j)) => j - 1,
        _ => 0,
    };
    &En::precise(crate::series::LaurentPoly::eps_pow(p)) + &En::from(lower)
}

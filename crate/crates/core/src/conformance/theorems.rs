//! Derived statements, `T1`..`T56`.

use crate::laws::{
    dist_decide, dist_special_cases, magnitude_distributes, subdist_check, SpecialCase,
};
use crate::number::ExternalNumber as En;

use super::{sorted2, Outcome, Property};

fn e(x: &En) -> En {
    x.neutral()
}

fn u(x: &En) -> En {
    x.unity().expect("zeroless operand")
}

fn inv(x: &En) -> En {
    x.inverse().expect("zeroless operand")
}

fn rel(x: &En) -> En {
    En::from(x.relative_uncertainty())
}

fn one() -> En {
    En::one()
}

fn zero() -> En {
    En::zero()
}

/// `x(y+z) = xy + xz`
fn distributes(x: &En, y: &En, z: &En) -> bool {
    x * &(y + z) == &(x * y) + &(x * z)
}

pub(super) fn properties() -> Vec<Property> {
    vec![
        Property::new("T1", 3, "x+y = x+z iff e(x)+y = e(x)+z", |g| {
            let (x, y) = (g.any(), g.any());
            let z = if g.coin(0.5) {
                &y + &g.inside(x.magnitude())
            } else {
                g.any()
            };
            let ex = e(&x);
            Outcome::check(
                (&x + &y == &x + &z) == (&ex + &y == &ex + &z),
                &[("x", &x), ("y", &y), ("z", &z)],
            )
        }),
        Property::new("T2", 2, "e is idempotent, additive and linear", |g| {
            let (x, y) = (g.any(), g.any());
            let (ex, ey) = (e(&x), e(&y));
            let s = &ex + &ey;
            Outcome::check(
                &ex + &ex == ex && e(&(&x + &y)) == s && (s == ex || s == ey) && e(&ex) == ex,
                &[("x", &x), ("y", &y)],
            )
        }),
        Property::new("T3", 2, "x = e(y) implies x = e(x)", |g| {
            let y = g.any();
            let x = if g.coin(0.8) { e(&y) } else { g.any() };
            Outcome::implies(x == e(&y), || x == e(&x), &[("x", &x), ("y", &y)])
        }),
        Property::new("T4", 2, "symmetric elements", |g| {
            let (x, y) = (g.any(), g.any());
            let ex = e(&x);
            Outcome::check(
                -&(-&x) == x && -&(&x + &y) == &(-&x) + &(-&y) && e(&(-&x)) == ex && -&ex == ex,
                &[("x", &x), ("y", &y)],
            )
        }),
        Property::new("T5", 2, "e(x)+e(y) = e(x) iff e(y) <= e(x)", |g| {
            let (x, y) = (g.any(), g.any());
            let (ex, ey) = (e(&x), e(&y));
            Outcome::check((&ex + &ey == ex) == (ey <= ex), &[("x", &x), ("y", &y)])
        }),
        Property::new(
            "T6",
            1,
            "|x| is x or -x, e(x) <= |x|, e(x) <= x iff -x <= e(x)",
            |g| {
                let x = g.any();
                let (a, ex) = (x.abs(), e(&x));
                Outcome::check(
                    (a == x || a == -&x) && e(&a) <= a && ex <= a && ((ex <= x) == (-&x <= ex)),
                    &[("x", &x)],
                )
            },
        ),
        Property::new("T7", 2, "sums of positives are positive", |g| {
            let (x, y) = (g.positive(), g.positive());
            let s = &x + &y;
            let plain = Outcome::check(e(&s) <= s, &[("x", &x), ("y", &y)]);
            let z = if g.coin(0.7) {
                &y + &g.positive()
            } else {
                g.any()
            };
            let bound =
                Outcome::implies(e(&y) <= y && y <= z, || e(&z) <= z, &[("y", &y), ("z", &z)]);
            Outcome::all([plain, bound])
        }),
        Property::new(
            "T8",
            2,
            "for positive y, y <= e(x) iff e(x)+y = e(x)",
            |g| {
                let x = g.any();
                let y = if g.coin(0.5) {
                    g.inside(x.magnitude()).abs()
                } else {
                    g.positive()
                };
                let ex = e(&x);
                Outcome::check((y <= ex) == (&ex + &y == ex), &[("x", &x), ("y", &y)])
            },
        ),
        Property::new("T9", 3, "strict comparisons against magnitudes", |g| {
            let (x, y) = (g.negative_zeroless(), g.positive_zeroless());
            let w = g.any();
            let first = Outcome::check(x < y && x < e(&w), &[("x", &x), ("y", &y), ("w", &w)]);
            let (a, b, c) = (g.any(), g.any(), g.any());
            let third = Outcome::implies(
                a < &b + &e(&c) && e(&c) < e(&a),
                || a < b,
                &[("x", &a), ("y", &b), ("z", &c)],
            );
            Outcome::all([first, third])
        }),
        Property::new("T10", 2, "u(x) is not a magnitude, x zeroless", |g| {
            let (x, y) = (g.zeroless(), g.any());
            let ux = u(&x);
            Outcome::check(ux != e(&ux) && ux != e(&y), &[("x", &x), ("y", &y)])
        }),
        Property::new("T11", 2, "e(xy) = e(x)y for a magnitude x", |g| {
            let (x, y) = (g.magnitude(), g.any());
            Outcome::check(e(&(&x * &y)) == &e(&x) * &y, &[("x", &x), ("y", &y)])
        }),
        Property::new("T12", 2, "e(y)(-x) = e(y)x", |g| {
            let (x, y) = (g.any(), g.any());
            let ey = e(&y);
            Outcome::check(&ey * &(-&x) == &ey * &x, &[("x", &x), ("y", &y)])
        }),
        Property::new("T13", 2, "xy is a magnitude iff x or y is", |g| {
            let (x, y) = (g.any(), g.any());
            let p = &x * &y;
            Outcome::check(
                (p == e(&p)) == (x == e(&x) || y == e(&y)),
                &[("x", &x), ("y", &y)],
            )
        }),
        Property::new("T14", 1, "x^2 is not a magnitude, x zeroless", |g| {
            let x = g.zeroless();
            let s = &x * &x;
            Outcome::check(s != e(&s), &[("x", &x)])
        }),
        Property::new(
            "T15",
            1,
            "u(x)e(x) = e(x), xe(u(x)) = e(x), e(1/x) = e(x)/x^2",
            |g| {
                let x = g.zeroless();
                let (ex, ux, d) = (e(&x), u(&x), inv(&x));
                Outcome::check(
                    &ux * &ex == ex && &x * &e(&ux) == ex && e(&d) == &(&ex * &d) * &d,
                    &[("x", &x)],
                )
            },
        ),
        Property::new("T16", 3, "e(y) <= e(z) implies xe(y) <= xe(z)", |g| {
            let x = g.any();
            let (a, b) = (g.any(), g.any());
            let (y, z) = if e(&a) <= e(&b) { (a, b) } else { (b, a) };
            Outcome::implies(
                e(&y) <= e(&z),
                || &x * &e(&y) <= &x * &e(&z),
                &[("x", &x), ("y", &y), ("z", &z)],
            )
        }),
        Property::new("T17", 2, "e(x)e(y) <= xe(y)", |g| {
            let (x, y) = (g.any(), g.any());
            let ey = e(&y);
            Outcome::check(&e(&x) * &ey <= &x * &ey, &[("x", &x), ("y", &y)])
        }),
        Property::new("T18", 2, "e(x)e(y) <= e(xy)", |g| {
            let (x, y) = (g.any(), g.any());
            Outcome::check(&e(&x) * &e(&y) <= e(&(&x * &y)), &[("x", &x), ("y", &y)])
        }),
        Property::new("T19", 2, "xy is positive for positive x, y", |g| {
            let (x, y) = (g.positive(), g.positive());
            let p = &x * &y;
            Outcome::check(e(&p) <= p, &[("x", &x), ("y", &y)])
        }),
        Property::new(
            "T20",
            1,
            "e(x^2) <= x^2, strictly iff x is zeroless, and e(u(x)) < u(x)",
            |g| {
                let x = g.any();
                let s = &x * &x;
                let squares = (e(&s) <= s) && ((e(&s) == s) == x.is_magnitude());
                let unity = x.is_magnitude() || {
                    let ux = u(&x);
                    e(&ux) < ux
                };
                Outcome::check(squares && unity, &[("x", &x)])
            },
        ),
        Property::new("T21", 2, "xy < e(xy) for x > 0 > y zeroless", |g| {
            let (x, y) = (g.positive_zeroless(), g.negative_zeroless());
            let p = &x * &y;
            Outcome::check(p < e(&p), &[("x", &x), ("y", &y)])
        }),
        Property::new(
            "T22",
            3,
            "x < e(x) and y <= z imply xz + e(xy) <= xy + e(xz)",
            |g| {
                let x = g.negative_zeroless();
                let (y, z) = sorted2(g.any(), g.any());
                Outcome::implies(
                    x < e(&x) && y <= z,
                    || {
                        let (xy, xz) = (&x * &y, &x * &z);
                        &xz + &e(&xy) <= &xy + &e(&xz)
                    },
                    &[("x", &x), ("y", &y), ("z", &z)],
                )
            },
        ),
        Property::new("T23", 1, "e(x) < x iff e(1/x) < 1/x, x zeroless", |g| {
            let x = g.zeroless();
            let d = inv(&x);
            Outcome::check((e(&x) < x) == (e(&d) < d), &[("x", &x)])
        }),
        Property::new("T24", 1, "u(x) <= x implies e(x) < x", |g| {
            let x = if g.coin(0.6) {
                g.large_positive()
            } else {
                g.zeroless()
            };
            Outcome::implies(u(&x) <= x, || e(&x) < x, &[("x", &x)])
        }),
        Property::new(
            "T25",
            1,
            "1/x and u(x) lie on opposite sides of u(x)",
            |g| {
                let x = if g.coin(0.5) {
                    g.large_positive()
                } else {
                    g.zeroless()
                };
                let big = Outcome::implies(u(&x) <= x, || inv(&x) <= u(&x), &[("x", &x)]);
                let y = if g.coin(0.5) {
                    g.small_positive()
                } else {
                    g.zeroless()
                };
                let small =
                    Outcome::implies(e(&y) < y && y <= u(&y), || u(&y) <= inv(&y), &[("x", &y)]);
                Outcome::all([big, small])
            },
        ),
        Property::new(
            "T26",
            1,
            "e(d) < d <= x implies e(d) <= e(x) for d = 1/x",
            |g| {
                let x = if g.coin(0.6) {
                    g.large_positive()
                } else {
                    g.zeroless()
                };
                let d = inv(&x);
                Outcome::implies(e(&d) < d && d <= x, || e(&d) <= e(&x), &[("x", &x)])
            },
        ),
        Property::new("T27", 3, "x(e(y)+e(z)) = xe(y) + xe(z)", |g| {
            let (x, y, z) = (g.any(), g.any(), g.any());
            let (ey, ez) = (e(&y), e(&z));
            let special = dist_special_cases(&x, &ey, &ez, SpecialCase::BothMagnitudes);
            Outcome::check(
                distributes(&x, &ey, &ez) && special == Ok(true),
                &[("x", &x), ("y", &y), ("z", &z)],
            )
        }),
        Property::new("T28", 3, "e(x)(e(y)+e(z)) = e(x)e(y) + e(x)e(z)", |g| {
            let (x, y, z) = (g.any(), g.any(), g.any());
            Outcome::check(
                distributes(&e(&x), &e(&y), &e(&z)),
                &[("x", &x), ("y", &y), ("z", &z)],
            )
        }),
        Property::new(
            "T29",
            3,
            "e(z) <= e(y) implies x(y+e(z)) = xy + xe(z)",
            |g| {
                let x = g.any();
                let (a, b) = (g.any(), g.any());
                let (z, y) = if e(&a) <= e(&b) { (a, b) } else { (b, a) };
                let ez = e(&z);
                Outcome::implies(
                    ez <= e(&y),
                    || {
                        distributes(&x, &y, &ez)
                            && dist_special_cases(&x, &y, &ez, SpecialCase::AbsorbedMagnitude)
                                == Ok(true)
                    },
                    &[("x", &x), ("y", &y), ("z", &z)],
                )
            },
        ),
        Property::new("T30", 2, "xy = x(y+e(y)) = xy + xe(y)", |g| {
            let (x, y) = (g.any(), g.any());
            let ok =
                dist_special_cases(&x, &y, &zero(), SpecialCase::YPlusOwnMagnitude) == Ok(true);
            Outcome::check(ok, &[("x", &x), ("y", &y)])
        }),
        Property::new("T31", 2, "properties of 0 and 1", |g| {
            let x = if g.coin(0.5) {
                g.positive()
            } else {
                -&g.positive()
            };
            let y = if g.coin(0.5) {
                g.positive()
            } else {
                -&g.positive()
            };
            let (z, o) = (zero(), one());
            let constants = e(&z) == z
                && e(&o) == z
                && o != z
                && u(&o) == o
                && -&z == z
                && &o * &z == z
                && z < o;
            let items = [
                Outcome::check(constants && z <= e(&x), &[("x", &x)]),
                Outcome::implies(z <= x, || e(&x) <= x, &[("x", &x)]),
                Outcome::implies(z <= x && z <= y, || z <= &x + &y, &[("x", &x), ("y", &y)]),
                Outcome::implies(x <= z && y <= z, || &x + &y <= z, &[("x", &x), ("y", &y)]),
            ];
            Outcome::all(items)
        }),
        Property::new("T32", 1, "x0 = 0", |g| {
            let x = g.any();
            Outcome::check(
                &x * &zero() == zero() && &zero() * &x == zero(),
                &[("x", &x)],
            )
        }),
        Property::new(
            "T33",
            2,
            "precise elements are closed under the operations",
            |g| {
                let (a, b) = (g.precise(), g.precise());
                let closed = (&a + &b).is_precise() && (-&b).is_precise() && (&a * &b).is_precise();
                let units = a == zero() || (u(&a).is_precise() && inv(&a).is_precise());
                Outcome::check(closed && units, &[("a", &a), ("b", &b)])
            },
        ),
        Property::new("T34", 3, "precise elements form an ordered field", |g| {
            let (a, b, c) = (g.precise(), g.precise(), g.precise());
            let ring = &a + &(&b + &c) == &(&a + &b) + &c
                && &a + &b == &b + &a
                && &a * &(&b * &c) == &(&a * &b) * &c
                && &a * &b == &b * &a
                && &a * &(&b + &c) == &(&a * &b) + &(&a * &c)
                && &a + &(-&a) == zero()
                && (a == zero() || &a * &inv(&a) == one());
            let order = (a <= b || b <= a)
                && (a > b || &a + &c <= &b + &c)
                && (!(zero() < a && zero() < b) || zero() < &a * &b);
            Outcome::check(ring && order, &[("a", &a), ("b", &b), ("c", &c)])
        }),
        Property::new("T35", 3, "a(x+y) = ax + ay for precise a", |g| {
            let (a, x, y) = (g.precise(), g.any(), g.any());
            Outcome::check(distributes(&a, &x, &y), &[("a", &a), ("x", &x), ("y", &y)])
        }),
        Property::new("T36", 1, "u(a) = 1 for precise a != 0", |g| {
            let a = g.precise_nonzero();
            Outcome::check(u(&a) == one(), &[("a", &a)])
        }),
        Property::new(
            "T37",
            1,
            "R(x) = e(x)/x and x = x(u(x) + R(x)); R of magnitudes is Mmax",
            |g| {
                let x = g.any();
                let r = rel(&x);
                let ok = if x.is_magnitude() {
                    r == En::max_magnitude()
                } else {
                    let d = inv(&x);
                    r == &e(&x) * &d
                        && r == e(&u(&x))
                        && x == &x * &(&u(&x) + &r)
                        && (!x.is_precise() || r == zero())
                };
                Outcome::check(ok, &[("x", &x)])
            },
        ),
        Property::new(
            "T38",
            3,
            "distributivity holds iff e(x) distributes or R(x) <= R(y)+R(z)",
            |g| {
                let (x, y, z) = g.triple();
                let r = dist_decide(&x, &y, &z);
                Outcome::check(
                    r.holds == r.criterion_holds() && r.holds == distributes(&x, &y, &z),
                    &[("x", &x), ("y", &y), ("z", &z)],
                )
            },
        )
        .alias("T-criterion"),
        Property::new("T39", 3, "x(y+z) <= xy + xz", |g| {
            let (x, y, z) = g.triple();
            Outcome::check(
                subdist_check(&x, &y, &z),
                &[("x", &x), ("y", &y), ("z", &z)],
            )
        }),
        Property::new("T40", 3, "x(y+z) = xy + xz for y, z of equal sign", |g| {
            let x = g.any();
            let (y, z) = if g.coin(0.5) {
                (g.positive(), g.positive())
            } else {
                (g.negative_zeroless(), g.negative_zeroless())
            };
            Outcome::check(
                dist_special_cases(&x, &y, &z, SpecialCase::SameSign) == Ok(true),
                &[("x", &x), ("y", &y), ("z", &z)],
            )
        }),
        Property::new("T41", 2, "x(y+y) = xy + xy", |g| {
            let (x, y) = (g.any(), g.any());
            Outcome::check(distributes(&x, &y, &y), &[("x", &x), ("y", &y)])
        }),
        Property::new(
            "T42",
            3,
            "for a magnitude x, x(y+z) = xy+xz iff it equals xy or xz",
            |g| {
                let x = g.magnitude();
                let y = g.zeroless();
                let z = if g.coin(0.6) {
                    g.near_opposite(&y)
                } else {
                    g.zeroless()
                };
                Outcome::implies(
                    z.is_zeroless(),
                    || {
                        let l = &x * &(&y + &z);
                        let (xy, xz) = (&x * &y, &x * &z);
                        (l == &xy + &xz) == (l == xy || l == xz)
                    },
                    &[("x", &x), ("y", &y), ("z", &z)],
                )
            },
        ),
        Property::new("T43", 3, "x(z+e(y)) = xz + xe(y)", |g| {
            let (x, y, z) = (g.any(), g.any(), g.any());
            Outcome::check(
                distributes(&x, &z, &e(&y)),
                &[("x", &x), ("y", &y), ("z", &z)],
            )
        }),
        Property::new("T44", 2, "R(x) <= R(y) implies e(x)y <= e(y)x", |g| {
            let (a, b) = (g.zeroless(), g.zeroless());
            let (x, y) = if rel(&a) <= rel(&b) { (a, b) } else { (b, a) };
            Outcome::implies(
                rel(&x) <= rel(&y),
                || &e(&x) * &y <= &e(&y) * &x,
                &[("x", &x), ("y", &y)],
            )
        }),
        Property::new(
            "T45",
            3,
            "e(x)(y+z) != e(x)y+e(x)z implies e(x)y = e(x)z",
            |g| {
                let x = if g.coin(0.5) {
                    g.with_finite_magnitude()
                } else {
                    g.any()
                };
                let y = if g.coin(0.5) { g.zeroless() } else { g.any() };
                let z = if g.coin(0.7) {
                    g.near_opposite(&y)
                } else {
                    g.any()
                };
                let ex = e(&x);
                Outcome::implies(
                    !magnitude_distributes(&x, &y, &z),
                    || &ex * &y == &ex * &z,
                    &[("x", &x), ("y", &y), ("z", &z)],
                )
            },
        ),
        Property::new(
            "T46",
            1,
            "e(x)/x = e(x)/a and e(x) < |a| for x = a + e(x)",
            |g| {
                let x = g.zeroless();
                let (a, _) = x.decompose();
                let ex = e(&x);
                let q = &ex * &inv(&a);
                Outcome::check(
                    ex < a.abs() && q == &ex * &inv(&x) && q == e(&u(&x)),
                    &[("x", &x)],
                )
            },
        ),
        Property::new(
            "T47",
            2,
            "u(x) = 1 + b + e(u(x)) with b precise implies |b| <= e(u(x))",
            |g| {
                let x = g.zeroless();
                let eu = e(&u(&x));
                let b = if g.coin(0.75) {
                    g.precise_inside(eu.magnitude())
                } else {
                    g.precise()
                };
                Outcome::implies(
                    u(&x) == &(&one() + &b) + &eu,
                    || b.abs() <= eu,
                    &[("x", &x), ("b", &b)],
                )
            },
        ),
        Property::new("T48", 1, "u(x) = 1 + e(u(x))", |g| {
            let x = g.zeroless();
            let ux = u(&x);
            Outcome::check(ux == &one() + &e(&ux), &[("x", &x)])
        }),
        Property::new("T49", 1, "e(u(x)) < 1", |g| {
            let x = g.zeroless();
            Outcome::check(e(&u(&x)) < one(), &[("x", &x)])
        }),
        Property::new("T50", 2, "e(x)u(y) = e(x)", |g| {
            let (x, y) = (g.any(), g.zeroless());
            let ex = e(&x);
            Outcome::check(&ex * &u(&y) == ex, &[("x", &x), ("y", &y)])
        }),
        Property::new("T51", 2, "e(x)y <= e(y)x implies R(x) <= R(y)", |g| {
            let (a, b) = (g.zeroless(), g.zeroless());
            let (x, y) = if &e(&a) * &b <= &e(&b) * &a {
                (a, b)
            } else {
                (b, a)
            };
            Outcome::implies(
                &e(&x) * &y <= &e(&y) * &x,
                || rel(&x) <= rel(&y),
                &[("x", &x), ("y", &y)],
            )
        }),
        Property::new(
            "T52",
            3,
            "under the criterion, e(x)(y+z) <= e(x)y + e(x)z",
            |g| {
                let (x, y, z) = g.triple();
                let r = dist_decide(&x, &y, &z);
                Outcome::implies(
                    r.holds == r.criterion_holds(),
                    || {
                        let ex = e(&x);
                        &ex * &(&y + &z) <= &(&ex * &y) + &(&ex * &z)
                    },
                    &[("x", &x), ("y", &y), ("z", &z)],
                )
            },
        ),
        Property::new("T53", 3, "x(y+z) = xy + xz for precise x", |g| {
            let (x, y, z) = (g.precise(), g.any(), g.any());
            Outcome::check(distributes(&x, &y, &z), &[("x", &x), ("y", &y), ("z", &z)])
        }),
        Property::new("T54", 2, "e(x)(p+p) = e(x)p for precise p", |g| {
            let (x, p) = (g.any(), g.precise());
            let ex = e(&x);
            Outcome::check(&ex * &(&p + &p) == &ex * &p, &[("x", &x), ("p", &p)])
        }),
        Property::new("T55", 3, "x(p+e(y)) = xp + xe(y) for precise p", |g| {
            let (x, y, p) = (g.any(), g.any(), g.precise());
            Outcome::check(
                distributes(&x, &p, &e(&y)),
                &[("x", &x), ("y", &y), ("p", &p)],
            )
        }),
        Property::new(
            "T56",
            3,
            "the criterion holds iff the adapted distributive law holds",
            |g| {
                let (x, y, z) = g.triple();
                let r = dist_decide(&x, &y, &z);
                let criterion = r.holds == r.criterion_holds();
                let ex = e(&x);
                let identity = &(&x * &y) + &(&x * &z) == &(&r.lhs + &(&ex * &y)) + &(&ex * &z);
                Outcome::check(
                    criterion == identity && identity,
                    &[("x", &x), ("y", &y), ("z", &z)],
                )
            },
        )
        .alias("T-equivalence"),
    ]
}

#[cfg(test)]
mod tests {
    use super::super::{run, GenProfile};
    use super::*;

    #[test]
    fn every_theorem_holds_briefly() {
        let profile = GenProfile::default();
        for p in properties() {
            let r = run(Box::leak(Box::new(p)), 200, 1, &profile);
            assert_eq!(r.failures, 0, "{r}");
        }
    }
}

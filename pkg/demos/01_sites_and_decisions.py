"""Walkthrough: build two small sites and decide both logical laws.

The running examples are the cospan category (two arrows into a common
codomain, the smallest category that is not right Ore) and the free
idempotent monoid on one generator.
"""

from demorgan import (
    booleanize_site,
    countroc_witness,
    demorgan_counterexample,
    demorgan_topology,
    demorganize_site,
    dense_topology,
    generate_sieve,
    is_boolean_general,
    is_demorgan_general,
    is_demorgan_reduced,
    is_stably_nonempty,
    m_sieve,
    oracle_is_demorgan,
    pullback_sieve,
    right_ore,
    trivial_topology,
)
from demorgan.fixtures import cspan, mon2


def show_topology(label, J):
    print(f"{label}:")
    for obj in sorted(J.category.objects):
        sieves = sorted(sorted(s.members) for s in J.covers(obj))
        print(f"  {obj}: " + ", ".join("{" + ",".join(s) + "}" for s in sieves))


C = cspan()
print("== the cospan site: f: a -> c <- b :g ==")
print("right Ore:", right_ore(C))

# Sieve calculus on the object c.
R = generate_sieve(C, "c", ["f"])
print("sieve generated by f:", sorted(R.members))
print("pullback along g is empty:", not pullback_sieve(C, "g", R).members)
print("stably non-empty:", is_stably_nonempty(C, R))
print("m-sieve of (f):", sorted(m_sieve(C, R).members))

# The presheaf topos on a non-right-Ore category fails De Morgan's law.
T = trivial_topology(C)
print("\npresheaf topos De Morgan:", is_demorgan_general(C, T))
obj, closed, criterion = demorgan_counterexample(C, T)
print(f"counterexample: closed sieve {sorted(closed.members)} on {obj}, "
      f"criterion sieve {sorted(criterion.members)} does not cover")
print("quick witness (only-maximal cover plus disjoint pair):",
      countroc_witness(C, T))

# The least topology fixing it, and the least Boolean one.
show_topology("\nDe Morgan topology", demorgan_topology(C))
show_topology("dense topology", dense_topology(C))
K = demorganize_site(C, T)
print("\nsheaves on the DeMorganized site satisfy De Morgan's law:",
      is_demorgan_general(K.category, K))
print("here the Booleanization coincides:",
      booleanize_site(C, T) == K)

# All three decision methods agree.
print("\nmethods on the repaired site:",
      is_demorgan_general(C, K),
      is_demorgan_reduced(C, K),
      oracle_is_demorgan(C, K))

M = mon2()
print("\n== the idempotent monoid site ==")
print("right Ore:", right_ore(M))
TM = trivial_topology(M)
print("presheaf topos De Morgan:", is_demorgan_general(M, TM))
print("presheaf topos Boolean:", is_boolean_general(M, TM))
show_topology("Booleanization (the atomic topology)", booleanize_site(M, TM))

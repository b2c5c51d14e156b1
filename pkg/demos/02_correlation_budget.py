"""How much correlation the encoding carries as the local energy grows.

The classical correlations delta_c grow without bound in the thermal
variance, while the discord delta_d saturates just below one bit.  The
inverse map lets any result be plotted against the discord instead of mu.
"""

from gaussdisc import correlation_budget, delta_d, mu_from_delta_d

print(f"{'mu':>10} {'delta_c [bits]':>15} {'delta_d [bits]':>15}")
for mu in (1.0, 1.5, 2.0, 3.0, 5.0, 10.0, 100.0, 1e4, 1e6):
    budget = correlation_budget(mu)
    print(f"{mu:10g} {budget.delta_c:15.6f} {budget.delta_d:15.6f}")

print("\ninverting the discord curve:")
for target in (0.25, 0.5, 0.75, 0.9):
    mu = mu_from_delta_d(target)
    print(f"  delta_d = {target:4g}  ->  mu = {mu:12.6f}  (check: {delta_d(mu):.10f})")

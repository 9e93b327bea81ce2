"""
The theorem registry
====================

Every result is a registered check with a tier. Must-pass checks gate the
exit status; informational ones document printed examples that disagree
with enumeration.
"""

from dumont import REGISTRY, run_all, run_check

print(len(REGISTRY), "checks registered")
print(run_check("th2a", 12))

mismatch = run_check("example-d213", 8)
print(mismatch.status, mismatch.mismatch)

# %%
# A full sweep. Four workers give the same report as one, apart from timings.
if __name__ == "__main__":
    report = run_all(10, workers=4)
    print(report.to_text())
    print(report.summary, "ok" if report.ok else "FAILED")

    for c in report.informational_mismatches():
        m = c.mismatch
        print(f"{c.id}: n={m['n']} enumerated {m['oracle']} printed {m['formula']}")

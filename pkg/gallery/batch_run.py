"""
Verifying the whole catalog
===========================

Every registered identity is checked at every point of its default
parameter grid.  This is what ``opgf run-all`` does.
"""

from collections import Counter

from opgf.verify import RunConfig, run_all

result = run_all(RunConfig(order=8, jobs=2))
print(result["summary"])

per_id = Counter(job["id"] for job in result["jobs"] if job["status"] == "pass")
for ident, count in sorted(per_id.items()):
    print(f"{ident:<8} {count} points")

"""A tour of the command-line interface, run in a throwaway cache dir.

The CLI wires the whole pipeline together: solve writes a canonical JSON
report per lattice (cached branch by branch), verify re-derives every
claim in a report from its serialized exact points, compare diffs a
report against the embedded reference row, and table renders solved rows.
Exit codes: 0 ok, 1 diff/verification failure, 2 budget exhausted,
3 usage error.
"""

import tempfile

from dmrep.cli import main

cache = tempfile.mkdtemp(prefix="dmrep-demo-")
print("cache dir:", cache)


def run(*argv):
    print("\n$ dmrep " + " ".join(argv))
    rc = main(list(argv))
    print("(exit %d)" % rc)
    return rc


# solve one lattice; the report lands in <cache>/reports/ and on stdout
run("solve", "--lattice", "t3-p10-k2", "--cache-dir", cache,
    "--format", "markdown")

# a second solve is pure cache hits and byte-identical output
run("solve", "--lattice", "t3-p10-k2", "--cache-dir", cache,
    "--format", "markdown")

# re-verify every exact claim in the stored report
run("verify", cache + "/reports/t3-p10-k2.report.json")

# cell-by-cell comparison against the embedded reference row
run("compare", "--lattice", "t3-p10-k2", "--cache-dir", cache,
    "--format", "markdown")

# render everything solved so far
run("table", "--all", "--cache-dir", cache)

# budgeted runs exit 2 and leave a resume token naming the pending branches
run("solve", "--lattice", "t2-p3-k7", "--cache-dir", cache,
    "--budget-steps", "200")

# drop stale cache entries (wipe everything with --wipe-all)
run("cache-gc", "--cache-dir", cache)

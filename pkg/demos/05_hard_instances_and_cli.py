"""
Hard instances and the command-line workflow
============================================

The bipartite reduction from two-party set disjointness produces the
instances that make k-connectivity fundamentally expensive for streaming
algorithms: the graph is k-connected exactly when the two binary strings
share no 1-position, so any certifier must in effect answer disjointness.
The same instances exercise the CLI round trip: gen -> certify -> oracle.
"""
import subprocess
import sys
import tempfile
from pathlib import Path

from streamvc.graph import replay_stream
from streamvc.instances import gen_disjointness, random_disjointness
from streamvc.oracle import find_vertex_cut, is_k_connected

n, k = 14, 3

for force in ("disjoint", "intersecting"):
    inst = random_disjointness(n, k, seed=2, force=force)
    alice, bob = gen_disjointness(inst)
    g = replay_stream(alice + bob, n).support()
    print(f"{force:12s} strings -> {len(alice) + len(bob)} insertions, "
          f"k-connected: {is_k_connected(g, k)}")
    if force == "intersecting":
        cut = find_vertex_cut(g, k)
        print(f"{'':12s} witness cut of size {len(cut)}: {sorted(cut)}")

# -- the same flow through the CLI ---------------------------------------

workdir = Path(tempfile.mkdtemp())
stream_file = workdir / "disj.stream"


def cli(*args):
    proc = subprocess.run(
        [sys.executable, "-m", "streamvc.cli", *args],
        capture_output=True,
        text=True,
    )
    out = proc.stdout.strip() or proc.stderr.strip()
    print(f"$ streamvc {' '.join(args)}\n  -> exit {proc.returncode}: {out[:120]}")
    return proc.returncode


cli("gen", "disjointness", "--n", "14", "--k", "3", "--seed", "2",
    "--intersecting", "--out", str(stream_file))
cli("certify", str(stream_file), "--mode", "dynamic",
    "--scale-c", "5", "--delta", "0.01", "--oracle")
cli("certify", str(stream_file), "--mode", "insertion")
cli("oracle", str(stream_file))
cli("check", str(stream_file), "--trials", "10", "--scale-c", "20")

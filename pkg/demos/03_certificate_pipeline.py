"""
Connectivity certificates from sampled subsets
==============================================

Union r = ceil(C k^2 ln n) spanning forests, one per vertex subset drawn
with probability 1/k per vertex, and the result decides k-connectivity
for the whole graph: soundly always (it is a subgraph), completely with
high probability. The same recipe runs offline on a materialized graph
or in one pass over a dynamic stream via sketch banks.
"""
from streamvc.certificate import (
    CertParams,
    StreamCertifier,
    build_certificate_offline,
    decide_k_connected,
    preserved_st_connectivity,
)
from streamvc.graph import replay_stream
from streamvc.instances import gen_planted_cut, gen_random_stream
from streamvc.oracle import find_vertex_cut, is_k_connected, removal_disconnects

# -- offline, on a graph with a planted 2-vertex cut ---------------------

n, k = 32, 3
g, planted = gen_planted_cut(n, k, seed=3)
params = CertParams(n=n, k=k, scale_c=20, seed=17)
cert = build_certificate_offline(g, params)

print(f"planted separator {sorted(planted)} in a graph with {len(g)} edges")
print(f"r = {params.num_forests} forests, |H| = {len(cert.edges)} edges, "
      f"sum |V_i| = {cert.sum_subset_sizes}")
print("verdict  :", decide_k_connected(cert))
print("oracle   :", is_k_connected(g, k))

# the certificate preserves small cuts, not just the verdict
cut = find_vertex_cut(cert.edges, k)
print("cut found in H:", cut, "- also cuts G:", removal_disconnects(g, cut))

# and capped s-t disjoint-path counts agree between G and H
s, t = 0, n - 1
print("capped s-t counts (G, H):", preserved_st_connectivity(cert, g, s, t))

# -- the same certificate from a single pass over a dynamic stream -------

n, k = 24, 2
events = gen_random_stream(n, target_density=0.3, delete_fraction=0.25, seed=8)
params = CertParams(n=n, k=k, scale_c=5, seed=21, delta=0.01)

certifier = StreamCertifier(params)
for e in events:
    certifier.update(e)
stream_cert = certifier.finalize()

g = replay_stream(events, n).support()
print(f"\nstream of {len(events)} events over n={n}, final support {len(g)} edges")
print(f"sketch state: {stream_cert.sketch_bytes} bytes across "
      f"{params.num_forests} banks")
print("H is a subgraph of the final support:",
      stream_cert.edges.is_subset_of(g))
print("stream verdict:", decide_k_connected(stream_cert),
      "| oracle:", is_k_connected(g, k))

# offline and streaming draw the same subsets for the same seed, so the
# certificates agree on every subset's component structure
offline_cert = build_certificate_offline(g, params)
print("offline |H| =", len(offline_cert.edges),
      "| streaming |H| =", len(stream_cert.edges))
print(stream_cert.to_json()[:100] + "...")

"""A small timing run against the Krausz-partition baseline.

Absolute times depend on the machine; the full grid is
``lgroot bench`` with the default configuration.

Run: python3 demos/04_benchmark.py
"""

from lgroot.bench import BenchConfig, format_summary, run_bench, summarize

cfg = BenchConfig(node_counts=(10, 20, 30), probabilities=(0.3, 0.6, 0.9), trials=5, seed=1, warmup=1, repeats=3)
records = run_bench(cfg)
print(f"{len(records)} inputs, every output verified")
print(format_summary(summarize(records)))

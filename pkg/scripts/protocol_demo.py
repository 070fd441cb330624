"""End-to-end protocol demo: exhaustive round trips for small N, then one
seeded session whose transcript is printed as JSON."""

import argparse

from densecode import roundtrip_all, session


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=0x5DC0DE)
    args = parser.parse_args()

    for n_pairs in (1, 2, 3):
        report = roundtrip_all(n_pairs)
        print(
            f"N={n_pairs}: {report.message_count} messages, "
            f"{2 * n_pairs} bits via {n_pairs} qubits, "
            f"{len(report.failures)} failures"
        )

    transcript = session(2, [0, 5, 10, 15], seed=args.seed)
    print()
    print(transcript.to_json(), end="")


if __name__ == "__main__":
    main()

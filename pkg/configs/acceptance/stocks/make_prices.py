"""Write the synthetic daily-close CSVs used by ../stocks.json.

Four tickers over the weekdays of 2012-2014 follow geometric random walks;
each pair shares a common daily factor. Deterministic (seed 0).

    python3 make_prices.py
"""
import datetime as dt
from pathlib import Path

import numpy as np

TICKERS = {"AAA": 40.0, "BBB": 28.0, "CCC": 75.0, "DDD": 12.0}
PAIRS = (("AAA", "BBB"), ("CCC", "DDD"))


def weekdays(start, end):
    d = start
    while d <= end:
        if d.weekday() < 5:
            yield d.isoformat()
        d += dt.timedelta(days=1)


def main(out=Path(__file__).parent):
    rng = np.random.default_rng(0)
    days = list(weekdays(dt.date(2012, 1, 2), dt.date(2014, 12, 31)))
    for a, b in PAIRS:
        shared = rng.standard_normal(len(days) - 1)
        for t in (a, b):
            own = rng.standard_normal(len(days) - 1)
            r = 0.0003 + 0.015 * (0.7 * shared + np.sqrt(1 - 0.49) * own)
            close = TICKERS[t] * np.exp(np.concatenate([[0.0], np.cumsum(r)]))
            lines = ["date,close"] + [f"{d},{c:.4f}" for d, c in zip(days, close)]
            (Path(out) / f"{t}.csv").write_text("\n".join(lines) + "\n")


if __name__ == "__main__":
    main()

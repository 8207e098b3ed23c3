from typing import Dict

import pandas as pd
from pandas import DataFrame

from dto.exceptions import SequenceFileError


def read_sequence_file(path: str) -> DataFrame:
    """Load a b-file (`n value` per line, `#` comments) into a DataFrame.

    Values are kept exact: both columns are read as strings and converted to Python
    ints, since sequence terms outgrow int64 quickly.

    Args:
        path: Path to the b-file.

    Returns:
        A DataFrame with integer columns n and value, sorted by n.

    Raises:
        SequenceFileError: If a line does not hold exactly two integers or an index repeats.
    """
    try:
        df = pd.read_csv(path, sep=r"\s+", comment='#', header=None, dtype=str, skip_blank_lines=True,
                         engine='python')
    except pd.errors.EmptyDataError:
        return DataFrame({'n': [], 'value': []})
    except (pd.errors.ParserError, UnicodeDecodeError) as e:
        raise SequenceFileError(f"Malformed sequence file {path}: {e}") from e
    if df.shape[1] != 2 or df.isna().any().any():
        raise SequenceFileError(f"Sequence file {path} must hold two columns `n value`")
    df.columns = ['n', 'value']
    try:
        df['n'] = df['n'].map(int)
        df['value'] = df['value'].map(int)
    except ValueError as e:
        raise SequenceFileError(f"Non-integer entry in {path}: {e}") from e
    if df['n'].duplicated().any():
        raise SequenceFileError(f"Repeated index in {path}: {df.loc[df['n'].duplicated(), 'n'].tolist()}")
    return df.sort_values('n').reset_index(drop=True)


def sequence_terms(df: DataFrame) -> Dict[int, int]:
    return dict(zip(df['n'], df['value']))

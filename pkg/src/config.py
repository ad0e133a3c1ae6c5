from environs import Env


class Settings:
    """
    Runtime settings read from the environment and an optional .env file.

    Attributes:
        fixtures (str): Root directory of the fixture corpus.
        max_inn_order (int): Bound for listing every element of a permutation group.
        max_aut_order (int): Largest group whose full Aut(G) is enumerated.
        max_iso_order (int): Largest quandle handed to generic isomorphism search.
        max_table_order (int): Largest group kept as a Cayley table.
        workers (int): Default worker count for searches and sweeps.
        log_level (str): Level of the stderr log sink.
        log_dir (str): Directory of the rotating log file.
    """

    def __init__(self) -> None:
        env = Env()
        env.read_env()

        with env.prefixed("TANGLECOLOR_"):
            self.fixtures = env.str("FIXTURES", "fixtures")
            self.max_inn_order = env.int("MAX_INN_ORDER", 1_000_000)
            self.max_aut_order = env.int("MAX_AUT_ORDER", 64)
            self.max_iso_order = env.int("MAX_ISO_ORDER", 24)
            self.max_table_order = env.int("MAX_TABLE_ORDER", 2048)
            self.workers = env.int("WORKERS", 1)
            self.log_level = env.str("LOG_LEVEL", "WARNING")
            self.log_dir = env.str("LOG_DIR", "logs")


settings = Settings()

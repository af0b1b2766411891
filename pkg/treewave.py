import sys

from dotenv import load_dotenv

# Load .env file at startup
load_dotenv()

from cli.main import main  # noqa: E402

if __name__ == "__main__":
    sys.exit(main())

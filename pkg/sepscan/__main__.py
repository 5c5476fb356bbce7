from sepscan.cli import main

raise SystemExit(main())

from hookmod.cli import main

raise SystemExit(main())

from jr_systole.cli.main import main

main()

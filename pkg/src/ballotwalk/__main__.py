from ballotwalk.cli import main

main()

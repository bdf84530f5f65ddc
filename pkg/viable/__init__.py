import sys
import viable.driver


def main():
    sys.exit(viable.driver.run(sys.argv))


if __name__ == '__main__':
    main()
